"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class ParameterError(ValueError):
    """Parameters violate the side conditions of a construction."""


class ResourceError(RuntimeError):
    """A computation was refused because it exceeds a configured bound."""
