"""Crossed drawings for hook shapes mu = (K+1, 1^L).

A drawing interleaves K y-columns (heights K, K-1, ..., 1 from left to right)
above an axis with L x-columns (depths L, L-1, ..., 1) below it, on places
1..K+L.  Each column carries some number of crosses next to the axis.  Only
the per-column counts matter, so a drawing is a shape word plus a count
vector.

Place i differentiates variable i; variable n = K+L+1 is never touched.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from itertools import combinations, product
from typing import Iterator

from .bounds import check_bound
from .errors import ParameterError
from .polynomial import Monomial, differentiate
from .shapes import Partition, delta

Y_COL, X_COL = "Y", "X"


def column_sizes(shape: str) -> tuple[int, ...]:
    K = shape.count(Y_COL)
    L = shape.count(X_COL)
    sizes = []
    for c in shape:
        if c == Y_COL:
            sizes.append(K)
            K -= 1
        else:
            sizes.append(L)
            L -= 1
    return tuple(sizes)


def _y_cross_ranges(shape: str, sizes: tuple[int, ...], crosses) -> list[range] | None:
    """Allowed cross counts for every y-column given the x-column crosses.

    ``crosses`` only needs to be filled at x places.  Returns None when some
    y-column has no admissible count.
    """
    ranges = []
    for i, c in enumerate(shape):
        if c != Y_COL:
            continue
        lo, hi = 0, sizes[i]
        for j in range(i + 1, len(shape)):
            if shape[j] != X_COL:
                continue
            if crosses[j] == 0:
                lo = 1
                break
            if crosses[j] == sizes[j]:
                hi = sizes[i] - 1
                break
        if lo > hi:
            return None
        ranges.append(range(lo, hi + 1))
    return ranges


@dataclass(frozen=True)
class HookDrawing:
    K: int
    L: int
    shape: str
    crosses: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "crosses", tuple(self.crosses))
        shape = self.shape
        if len(shape) != self.K + self.L or shape.count(Y_COL) != self.K or shape.count(X_COL) != self.L:
            raise ValueError(f"shape {shape!r} is not a word with {self.K} Y and {self.L} X")
        if len(self.crosses) != len(shape):
            raise ValueError("one cross count per place is required")
        sizes = column_sizes(shape)
        if any(not 0 <= c <= s for c, s in zip(self.crosses, sizes)):
            raise ValueError(f"cross counts {self.crosses} exceed column sizes {sizes}")
        ranges = _y_cross_ranges(shape, sizes, self.crosses)
        ys = [c for a, c in zip(shape, self.crosses) if a == Y_COL]
        if ranges is None or any(c not in r for c, r in zip(ys, ranges)):
            raise ValueError(f"crosses {self.crosses} break the y-column rule for shape {shape}")

    @property
    def n(self) -> int:
        return self.K + self.L + 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return column_sizes(self.shape)

    @property
    def blanks(self) -> tuple[int, ...]:
        return tuple(s - c for s, c in zip(self.sizes, self.crosses))

    def to_json(self) -> dict:
        return {"shape": self.shape, "crosses": list(self.crosses)}

    @classmethod
    def from_json(cls, data: dict) -> HookDrawing:
        shape = data["shape"]
        return cls(shape.count(Y_COL), shape.count(X_COL), shape, tuple(data["crosses"]))

    def __str__(self) -> str:
        return " ".join(f"{a}{s}:{c}" for a, s, c in zip(self.shape, self.sizes, self.crosses))


@dataclass(frozen=True)
class CellSet:
    """Per place: column axis, crossed count (S) and blank count (T)."""

    axes: str
    crossed: tuple[int, ...]
    blank: tuple[int, ...]


def cells(d: HookDrawing) -> CellSet:
    return CellSet(d.shape, d.crosses, d.blanks)


def shape_words(K: int, L: int) -> list[str]:
    """All shape words, in lex order with Y before X."""
    words = []
    for xs in combinations(range(K + L), L):
        word = [Y_COL] * (K + L)
        for i in xs:
            word[i] = X_COL
        words.append("".join(word))
    words.sort(key=lambda w: w.replace(Y_COL, "0").replace(X_COL, "1"))
    return words


def enumerate_drawings(K: int, L: int) -> Iterator[HookDrawing]:
    """Every drawing for (K+1, 1^L) exactly once.

    Shapes come in lex order (Y < X) and, within a shape, cross vectors in
    lex order.
    """
    if K < 0 or L < 0:
        raise ValueError("K and L must be non-negative")
    for shape in shape_words(K, L):
        sizes = column_sizes(shape)
        xplaces = [i for i, c in enumerate(shape) if c == X_COL]
        yplaces = [i for i, c in enumerate(shape) if c == Y_COL]
        found = []
        for xc in product(*(range(sizes[i] + 1) for i in xplaces)):
            crosses = [0] * len(shape)
            for i, c in zip(xplaces, xc):
                crosses[i] = c
            ranges = _y_cross_ranges(shape, sizes, crosses)
            if ranges is None:
                continue
            for yc in product(*ranges):
                for i, c in zip(yplaces, yc):
                    crosses[i] = c
                found.append(tuple(crosses))
        found.sort()
        for crosses in found:
            # Bypass re-validation; enumeration builds valid drawings only.
            d = object.__new__(HookDrawing)
            object.__setattr__(d, "K", K)
            object.__setattr__(d, "L", L)
            object.__setattr__(d, "shape", shape)
            object.__setattr__(d, "crosses", crosses)
            yield d


def count_drawings(K: int, L: int) -> int:
    return sum(1 for _ in enumerate_drawings(K, L))


def _binomial(top: int, bottom: int) -> int:
    # C(-1, 0) = 1 covers the L = 0 boundary of the summation.
    if bottom == 0:
        return 1
    if top < bottom or top < 0:
        return 0
    return math.comb(top, bottom)


def count_formula(K: int, L: int) -> int:
    """Closed-form count summed over k1 + k2 = K.

    k1 is the number of y-columns right of the depth-1 x-column (free cross
    counts), k2 the number left of it (one forbidden count each).
    """
    if K < 0 or L < 0:
        raise ValueError("K and L must be non-negative")
    total = 0
    for k2 in range(K + 1):
        k1 = K - k2
        free = math.prod(range(2, k1 + 2))
        constrained = math.prod(range(k1 + 1, k1 + k2 + 1))
        total += free * constrained * math.factorial(L + 1) * _binomial(k2 + L - 1, k2)
    return total


def flip(d: HookDrawing) -> HookDrawing:
    """Swap crossed and blank cells."""
    return HookDrawing(d.K, d.L, d.shape, d.blanks)


def _operator(d: HookDrawing, counts) -> Monomial:
    n = d.n
    x = [0] * n
    y = [0] * n
    for i, (axis, c) in enumerate(zip(d.shape, counts)):
        (y if axis == Y_COL else x)[i] = c
    return Monomial(tuple(x), tuple(y))


def operators(d: HookDrawing) -> tuple[Monomial, Monomial]:
    """(S, T): derivative orders of the crossed and of the blank cells."""
    return _operator(d, d.crosses), _operator(d, d.blanks)


def _hook_for(d: HookDrawing, mu: Partition | None) -> Partition:
    if mu is None:
        return Partition.hook(d.K, d.L)
    if not mu.is_hook or mu.arms != (d.K, d.L):
        raise ParameterError(f"partition {mu} does not match drawings with K={d.K}, L={d.L}")
    return mu


def is_child(d: HookDrawing, d1: HookDrawing, mu: Partition | None = None) -> bool:
    """True iff d_T(d) d_S(d1) Delta_mu is a nonzero constant."""
    if (d.K, d.L) != (d1.K, d1.L):
        raise ParameterError("drawings belong to different hooks")
    if d == d1:
        raise ParameterError("the child relation is defined for distinct drawings")
    mu = _hook_for(d, mu)
    _, t = operators(d)
    s1, _ = operators(d1)
    result = differentiate(differentiate(delta(mu), s1), t)
    return bool(result) and result.is_constant()


@dataclass(frozen=True)
class ChildGraph:
    """Nodes are enumeration ranks; edge (i, j) means drawing j is a child of i."""

    K: int
    L: int
    nodes: tuple[HookDrawing, ...]
    edges: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "mu": str(Partition.hook(self.K, self.L)),
            "nodes": list(range(len(self.nodes))),
            "edges": [list(e) for e in self.edges],
        }


def children_graph(K: int, L: int) -> ChildGraph:
    """The child relation over all drawings.

    Delta_mu is homogeneous, so d_T d_S1 Delta is a constant only when
    deg T + deg S1 = deg Delta, and then it equals coeff * (exponent
    factorials) of the monomial T*S1.  The relation therefore reduces to a
    support lookup, cross-checked against ``is_child`` in the tests.
    """
    n = K + L + 1
    check_bound("graph", n)
    delta_terms = delta(Partition.hook(K, L))._terms
    nodes = tuple(enumerate_drawings(K, L))
    ops = [operators(d) for d in nodes]
    s_keys = [s.key for s, _ in ops]
    edges = []
    for i, (_, t) in enumerate(ops):
        tk = t.key
        for j, sk in enumerate(s_keys):
            if i != j and tuple(a + b for a, b in zip(tk, sk)) in delta_terms:
                edges.append((i, j))
    return ChildGraph(K, L, nodes, tuple(edges))


def is_acyclic(graph: ChildGraph) -> bool:
    sorter = TopologicalSorter({i: () for i in range(len(graph.nodes))})
    for i, j in graph.edges:
        sorter.add(j, i)
    try:
        sorter.prepare()
    except CycleError:
        return False
    return True


def flip_child_duality(d1: HookDrawing, d2: HookDrawing, mu: Partition | None = None) -> bool:
    """d2 is a child of d1 exactly when flip(d1) is a child of flip(d2)."""
    return is_child(d1, d2, mu) == is_child(flip(d2), flip(d1), mu)


def sample_pairs(K: int, L: int, count: int, seed: int) -> list[tuple[HookDrawing, HookDrawing]]:
    """``count`` ordered pairs of distinct drawings, reproducible from ``seed``."""
    nodes = list(enumerate_drawings(K, L))
    if len(nodes) < 2:
        return []
    rng = random.Random(seed)
    return [tuple(nodes[i] for i in rng.sample(range(len(nodes)), 2)) for _ in range(count)]


# -- completeness ---------------------------------------------------------------


def superpose(d1: HookDrawing, d2: HookDrawing) -> list[tuple[int, int]]:
    """Per place, (y cells, x cells) of the blanks of d1 stacked on the crosses of d2."""
    if (d1.K, d1.L) != (d2.K, d2.L):
        raise ParameterError("drawings belong to different hooks")
    out = []
    for a1, b1, a2, c2 in zip(d1.shape, d1.blanks, d2.shape, d2.crosses):
        y = (b1 if a1 == Y_COL else 0) + (c2 if a2 == Y_COL else 0)
        x = (b1 if a1 == X_COL else 0) + (c2 if a2 == X_COL else 0)
        out.append((y, x))
    return out


def is_complete_prefix(d1: HookDrawing, d2: HookDrawing, k: int) -> bool:
    """Whether the superposition reads as a full drawing shape on places 1..k.

    Each place must hold exactly one nonempty column, the y-columns reading
    K, K-1, ... and the x-columns L, L-1, ... from the left.
    """
    if not 0 <= k <= d1.K + d1.L:
        raise ValueError(f"prefix length {k} out of range")
    next_y, next_x = d1.K, d1.L
    for y, x in superpose(d1, d2)[:k]:
        if y and not x:
            if y != next_y:
                return False
            next_y -= 1
        elif x and not y:
            if x != next_x:
                return False
            next_x -= 1
        else:
            return False
    return True


def characterization(d1: HookDrawing, d2: HookDrawing, k: int) -> bool | None:
    """Quantitative test for completeness at place k, given places 1..k-1.

    Only covers the cases where the superposition has a y-column at place
    k; returns None otherwise.  ``d`` counts y-columns of d1 replaced by
    blank x-columns of d2 minus the reverse; ``d'`` counts fully crossed
    y-columns of d1 replaced by x-columns minus the reverse.
    """
    if not 1 <= k <= d1.K + d1.L:
        raise ValueError(f"place {k} out of range")
    d = dp = 0
    for j in range(k - 1):
        a1, a2 = d1.shape[j], d2.shape[j]
        if a1 == a2:
            continue
        if a2 == X_COL and d2.crosses[j] == 0:
            d += 1
        elif a2 == Y_COL and d2.crosses[j] == 0:
            d -= 1
        if a1 == Y_COL and d1.blanks[j] == 0:
            dp += 1
        elif a1 == X_COL and d1.blanks[j] == 0:
            dp -= 1
    i = k - 1
    a1, a2 = d1.shape[i], d2.shape[i]
    b1, c1 = d1.blanks[i], d1.crosses[i]
    b2, c2 = d2.blanks[i], d2.crosses[i]
    if a1 == Y_COL and a2 == Y_COL:
        return b2 == b1 + d and c2 == c1 + dp
    if a1 == X_COL and b1 == 0 and a2 == Y_COL:
        return b2 == d
    if a1 == Y_COL and a2 == X_COL and c2 == 0:
        return c1 == -dp
    return None
