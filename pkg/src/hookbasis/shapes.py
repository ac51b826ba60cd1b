"""Partitions, their biexponents, and the determinant Delta_mu."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .bounds import check_bound
from .polynomial import Polynomial


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts, drawn in French convention.

    Row 1 is the bottom row and holds ``parts[0]`` cells.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read ``"3,1,1"``."""
        try:
            parts = tuple(int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    @classmethod
    def hook(cls, K: int, L: int) -> Partition:
        """The hook ``(K+1, 1^L)``."""
        if K < 0 or L < 0:
            raise ValueError("hook arms must be non-negative")
        return cls((K + 1,) + (1,) * L)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    @property
    def is_hook(self) -> bool:
        return all(p == 1 for p in self.parts[1:])

    @property
    def arms(self) -> tuple[int, int]:
        """``(K, L)`` for a hook ``(K+1, 1^L)``."""
        if not self.is_hook:
            raise ValueError(f"{self} is not a hook")
        return self.parts[0] - 1, len(self.parts) - 1

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, column), both 1-based, row 1 at the bottom."""
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield i, j

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lex order of their parts."""

    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    if n < 1:
        return
    for parts in gen(n, n):
        yield Partition(parts)


def hooks(n: int) -> Iterator[Partition]:
    """The hooks of ``n``, ordered by K = 0, 1, ..., n-1."""
    for K in range(n):
        yield Partition.hook(K, n - 1 - K)


def biexponents(mu: Partition) -> list[tuple[int, int]]:
    """Pairs (row-1, column-1) over the cells of ``mu``, sorted lexicographically."""
    return sorted((i - 1, j - 1) for i, j in mu.cells())


def nmu(mu: Partition) -> int:
    """n(mu) = sum (i-1) mu_i, the x-degree of every term of Delta_mu."""
    return sum(i * p for i, p in enumerate(mu.parts))


def factorial_quotient(mu: Partition) -> int:
    """n! / prod(mu_i!)."""
    return math.factorial(mu.n) // math.prod(math.factorial(p) for p in mu.parts)


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=64)
def delta(mu: Partition) -> Polynomial:
    """det(x_i^{p_j} y_i^{q_j}) expanded over all permutations.

    Raises ResourceError when n exceeds the ``delta`` bound.
    """
    n = mu.n
    check_bound("delta", n)
    pairs = biexponents(mu)
    ps = [p for p, _ in pairs]
    qs = [q for _, q in pairs]
    terms = {}
    # Row i picks column sigma(i); distinct biexponents give distinct monomials.
    for sigma in permutations(range(n)):
        key = tuple(ps[s] for s in sigma) + tuple(qs[s] for s in sigma)
        terms[key] = permutation_sign(sigma)
    return Polynomial._raw(n, terms)
