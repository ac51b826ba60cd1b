"""Resource bounds on ``n`` for the expensive computations.

Defaults can be overridden through the ``HOOKBASIS_BOUNDS`` environment
variable, e.g. ``HOOKBASIS_BOUNDS="span=6,independence=7"``.
"""

import os

from .errors import ResourceError

ENV_VAR = "HOOKBASIS_BOUNDS"

DEFAULT_BOUNDS = {
    "delta": 8,
    "drawings": 9,
    "independence": 6,
    "span": 5,
    "graph": 6,
    "bars": 7,
}


def bounds() -> dict:
    """Return the active bounds, defaults merged with the environment override."""
    result = dict(DEFAULT_BOUNDS)
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return result
    for item in raw.split(","):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in DEFAULT_BOUNDS:
            raise ValueError(f"bad entry {item!r} in {ENV_VAR}")
        value = int(value)
        if value < 1:
            raise ValueError(f"bound {name} must be positive")
        result[name] = value
    return result


def check_bound(name: str, n: int) -> None:
    limit = bounds()[name]
    if n > limit:
        raise ResourceError(
            f"n={n} exceeds the {name} bound {limit} "
            f"(raise it with {ENV_VAR}={name}=<N>)"
        )
