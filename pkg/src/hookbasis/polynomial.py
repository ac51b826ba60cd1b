"""Sparse polynomials in x1..xn, y1..yn with exact rational coefficients.

A monomial is stored as a flat exponent tuple ``(a1, ..., an, b1, ..., bn)``
for ``x1^a1 ... xn^an y1^b1 ... yn^bn``.  Plain tuple comparison on that
layout is exactly the lexicographic order on ``x1, ..., xn, y1, ..., yn``,
which is the only term order used in this package.

A monomial also doubles as a differential operator: ``x1^2*y3`` read as an
operator means ``d^2/dx1^2 d/dy3``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import combinations_with_replacement
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .errors import DimensionError

# Exponents are Python ints; this only guards against nonsense input.
MAX_EXPONENT = 2**31 - 1

X, Y = "x", "y"


def _check_axis(axis: str) -> str:
    if axis not in (X, Y):
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return axis


def _normalize(c) -> int | Fraction:
    """Exact coefficient; integral values are kept as int for speed."""
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return _normalize(Fraction(c))
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """``x^xexp * y^yexp``; also used as the operator ``d_x^xexp d_y^yexp``."""

    xexp: tuple[int, ...]
    yexp: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xexp", tuple(self.xexp))
        object.__setattr__(self, "yexp", tuple(self.yexp))
        if len(self.xexp) != len(self.yexp):
            raise DimensionError("x and y exponent vectors differ in length")
        for e in self.xexp + self.yexp:
            if not isinstance(e, int) or e < 0 or e > MAX_EXPONENT:
                raise ValueError(f"invalid exponent {e!r}")

    @classmethod
    def from_key(cls, key: tuple[int, ...]) -> Monomial:
        n = len(key) // 2
        return cls(key[:n], key[n:])

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n, (0,) * n)

    @classmethod
    def variable(cls, n: int, axis: str, i: int) -> Monomial:
        _check_axis(axis)
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e), (0,) * n) if axis == X else cls((0,) * n, tuple(e))

    @property
    def n(self) -> int:
        return len(self.xexp)

    @property
    def key(self) -> tuple[int, ...]:
        return self.xexp + self.yexp

    @property
    def xdegree(self) -> int:
        return sum(self.xexp)

    @property
    def ydegree(self) -> int:
        return sum(self.yexp)

    def __mul__(self, other: Monomial) -> Monomial:
        _same_n(self.n, other.n)
        return Monomial(
            tuple(a + b for a, b in zip(self.xexp, other.xexp)),
            tuple(a + b for a, b in zip(self.yexp, other.yexp)),
        )

    def divides(self, other: Monomial) -> bool:
        _same_n(self.n, other.n)
        return all(a <= b for a, b in zip(self.key, other.key))

    def __lt__(self, other: Monomial) -> bool:
        return mono_cmp_lex(self, other) < 0

    def __str__(self) -> str:
        return _render_key(self.key) or "1"


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"variable counts differ: {a} != {b}")


def mono_cmp_lex(a: Monomial, b: Monomial) -> int:
    """Compare two monomials in lex order on x1..xn, y1..yn.

    Returns -1, 0 or 1.  The first differing exponent decides and the larger
    exponent gives the larger monomial, so ``x1 > x2 > ... > y1 > ... > yn``.
    """
    _same_n(a.n, b.n)
    ka, kb = a.key, b.key
    return (ka > kb) - (ka < kb)


def _render_key(key: tuple[int, ...]) -> str:
    n = len(key) // 2
    factors = []
    for pos, e in enumerate(key):
        if e:
            name = f"{X if pos < n else Y}{pos % n + 1}"
            factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent keys to coefficients.

    Zero coefficients are never stored, so the zero polynomial has no terms.
    """

    __slots__ = ("n", "_terms", "_lead")

    def __init__(self, n: int, terms: Mapping | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        clean = {}
        if terms:
            width = 2 * n
            for m, c in terms.items():
                key = m.key if isinstance(m, Monomial) else tuple(m)
                if len(key) != width:
                    raise DimensionError(f"monomial {key} does not have {width} exponents")
                clean[key] = clean.get(key, 0) + _normalize(c)
            clean = {k: _normalize(c) for k, c in clean.items() if c}
        self._terms = clean
        self._lead = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> Polynomial:
        # Trusted constructor: keys well formed, coefficients normalized and nonzero.
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._lead = None
        return p

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c) -> Polynomial:
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> Polynomial:
        return cls(m.n, {m.key: c})

    @classmethod
    def variable(cls, n: int, axis: str, i: int) -> Polynomial:
        return cls.from_monomial(Monomial.variable(n, axis, i))

    @property
    def terms(self) -> dict:
        """A copy of the term map, keyed by exponent tuples."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int | Fraction]]:
        """Terms as ``(Monomial, coefficient)`` in descending lex order."""
        for key in sorted(self._terms, reverse=True):
            yield Monomial.from_key(key), self._terms[key]

    def coefficient(self, m: Monomial | tuple) -> int | Fraction:
        key = m.key if isinstance(m, Monomial) else tuple(m)
        return self._terms.get(key, 0)

    def lead_key(self) -> tuple[int, ...]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lead is None:
            self._lead = max(self._terms)
        return self._lead

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(k) for k in self._terms)

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def bidegrees(self) -> set[tuple[int, int]]:
        """The set of (x-degree, y-degree) pairs over all terms."""
        n = self.n
        return {(sum(k[:n]), sum(k[n:])) for k in self._terms}

    def max_exponents(self) -> tuple[int, ...]:
        width = 2 * self.n
        if not self._terms:
            return (0,) * width
        return tuple(max(col) for col in zip(*self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return poly_add(self, -other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _same_n(p.n, q.n)
    out = dict(p._terms)
    for k, c in q._terms.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = _normalize(s)
        else:
            out.pop(k, None)
    return Polynomial._raw(p.n, out)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _same_n(p.n, q.n)
    out = {}
    for ka, ca in p._terms.items():
        for kb, cb in q._terms.items():
            k = tuple(a + b for a, b in zip(ka, kb))
            out[k] = out.get(k, 0) + ca * cb
    return Polynomial._raw(p.n, {k: _normalize(c) for k, c in out.items() if c})


def poly_scale(p: Polynomial, c) -> Polynomial:
    c = _normalize(c)
    if not c:
        return Polynomial.zero(p.n)
    return Polynomial._raw(p.n, {k: _normalize(v * c) for k, v in p._terms.items()})


def linear_combination(n: int, pairs: Iterable[tuple[object, Polynomial]]) -> Polynomial:
    """``sum(c * P)`` accumulated in a single dict."""
    out = {}
    for c, p in pairs:
        _same_n(n, p.n)
        c = _normalize(c)
        if not c:
            continue
        for k, v in p._terms.items():
            out[k] = out.get(k, 0) + c * v
    return Polynomial._raw(n, {k: _normalize(v) for k, v in out.items() if v})


def _differentiate_terms(terms: dict, op: tuple[int, ...]) -> dict:
    active = [(i, e) for i, e in enumerate(op) if e]
    if not active:
        return dict(terms)
    perm = math.perm
    out = {}
    for key, c in terms.items():
        coef = c
        for i, e in active:
            a = key[i]
            if a < e:
                break
            coef *= perm(a, e)
        else:
            new = list(key)
            for i, e in active:
                new[i] -= e
            new = tuple(new)
            out[new] = out.get(new, 0) + coef
    return out


def differentiate(p: Polynomial, op: Monomial | tuple[int, ...]) -> Polynomial:
    """Apply the monomial operator ``op`` to ``p``."""
    key = op.key if isinstance(op, Monomial) else tuple(op)
    if len(key) != 2 * p.n:
        raise DimensionError(f"operator has {len(key)} exponents, expected {2 * p.n}")
    out = _differentiate_terms(p._terms, key)
    return Polynomial._raw(p.n, {k: c for k, c in out.items() if c})


def partial_derivative(p: Polynomial, axis: str, i: int) -> Polynomial:
    """d/dx_i or d/dy_i of ``p`` (1-based index)."""
    return differentiate(p, Monomial.variable(p.n, axis, i))


def apply_diff_operator(q: Polynomial, p: Polynomial) -> Polynomial:
    """``Q(d) P``: each monomial of ``q`` acts as iterated partial derivatives."""
    _same_n(q.n, p.n)
    n = p.n
    bound = p.max_exponents()
    xmax = max((sum(k[:n]) for k in p._terms), default=0)
    ymax = max((sum(k[n:]) for k in p._terms), default=0)
    out = {}
    for key, c in q._terms.items():
        # Operators exceeding p's exponent in some variable, or its degree in
        # x or y, kill every term.
        if sum(key[:n]) > xmax or sum(key[n:]) > ymax:
            continue
        if any(e > b for e, b in zip(key, bound)):
            continue
        for k, v in _differentiate_terms(p._terms, key).items():
            out[k] = out.get(k, 0) + c * v
    return Polynomial._raw(p.n, {k: _normalize(v) for k, v in out.items() if v})


def leading_monomial(p: Polynomial) -> tuple[Monomial, int | Fraction]:
    """Lex-greatest monomial of ``p`` with its coefficient."""
    key = p.lead_key()
    return Monomial.from_key(key), p._terms[key]


def h_complete(k: int, axis: str, indices: Iterable[int], n: int) -> Polynomial:
    """Complete homogeneous symmetric polynomial of degree ``k`` in a variable subset."""
    _check_axis(axis)
    indices = sorted(set(indices))
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k == 0:
        return Polynomial.constant(n, 1)
    if not indices:
        raise ValueError("h_k with k > 0 needs a nonempty variable set")
    for i in indices:
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
    offset = 0 if axis == X else n
    terms = {}
    for combo in combinations_with_replacement(indices, k):
        key = [0] * (2 * n)
        for i in combo:
            key[offset + i - 1] += 1
        terms[tuple(key)] = 1
    return Polynomial._raw(n, terms)


def monomial_product(n: int, axis: str, indices: Iterable[int]) -> Polynomial:
    """The squarefree monomial prod_{i in indices} x_i (or y_i)."""
    m = Monomial.unit(n)
    for i in set(indices):
        m = m * Monomial.variable(n, axis, i)
    return Polynomial.from_monomial(m)


# -- text format --------------------------------------------------------------


def _render_coefficient(c) -> str:
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def render(p: Polynomial, max_terms: int | None = None) -> str:
    """Canonical text form, terms in descending lex order.

    Every coefficient is written explicitly, e.g. ``-1*x1*y2 + 1*x1*y3 - 2``.
    With ``max_terms`` the output is cut and ends with ``+ ...(k more terms)``.
    """
    if not p._terms:
        return "0"
    keys = sorted(p._terms, reverse=True)
    shown = keys if max_terms is None else keys[:max_terms]
    parts = []
    for idx, key in enumerate(shown):
        c = p._terms[key]
        mono = _render_key(key)
        if idx == 0:
            text = _render_coefficient(c)
        else:
            parts.append("-" if c < 0 else "+")
            text = _render_coefficient(abs(c))
        parts.append(f"{text}*{mono}" if mono else text)
    if len(shown) < len(keys):
        parts.append(f"+ ...({len(keys) - len(shown)} more terms)")
    return " ".join(parts)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:([xy])(\d+)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse(text: str, n: int) -> Polynomial:
    """Parse the canonical text form (and looser variants such as ``y2*x3 - x1``)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text[0] not in "+-":
        text = "+" + text
    pieces = _TERM_SPLIT.split(text)
    # split() yields ['', sign, term, sign, term, ...]
    if pieces[0] != "" or len(pieces) % 2 != 1:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms = {}
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        coef = Fraction(-1 if sign == "-" else 1)
        key = [0] * (2 * n)
        for factor in body.split("*"):
            factor = factor.strip()
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            axis, idx, exp, num = m.groups()
            if num is not None:
                coef *= Fraction(num)
                continue
            i = int(idx)
            if not 1 <= i <= n:
                raise DimensionError(f"variable {axis}{i} outside 1..{n}")
            key[(0 if axis == X else n) + i - 1] += int(exp) if exp else 1
        key = tuple(key)
        terms[key] = terms.get(key, 0) + coef
    return Polynomial(n, terms)
