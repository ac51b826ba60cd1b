"""Bar drawings and the monomial basis of the x-degree-zero part of M_mu.

Each non-zero biexponent (p, q) of mu becomes a bar with p x-cells below the
axis and q y-cells above it.  All x-cells are crossed; a bar's y-cells are
split into ``crossed_y`` crossed ones and ``q - crossed_y`` blank ones.
Bars are placed on places 1..n-1 and place i differentiates variable i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

from .bounds import check_bound
from .exactrank import RankReport, derivative_rows, incremental_rank
from .polynomial import Monomial
from .shapes import Partition, biexponents, factorial_quotient


@dataclass(frozen=True)
class BarDrawing:
    bars: tuple[tuple[int, int, int], ...]  # (depth, height, crossed_y)

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(tuple(b) for b in self.bars))
        for p, q, c in self.bars:
            if p < 0 or q < 0 or not 0 <= c <= q:
                raise ValueError(f"bad bar {(p, q, c)}")
        problem = _rule_violation(self.bars)
        if problem:
            raise ValueError(problem)

    @property
    def n(self) -> int:
        return len(self.bars) + 1

    def to_json(self) -> dict:
        return {"bars": [list(b) for b in self.bars]}

    @classmethod
    def from_json(cls, data: dict) -> BarDrawing:
        return cls(tuple(tuple(b) for b in data["bars"]))


def _rule_violation(bars) -> str | None:
    for i, (pi, qi, ci) in enumerate(bars):
        for pj, qj, _ in bars[i + 1:]:
            if pi == pj and qi < qj:
                return "bars of equal depth must come in decreasing height"
            if pj > pi and qi - ci < qj + 1:
                return "a bar left of a deeper bar of height q needs q+1 blank y-cells"
    return None


def mzero_dimension(mu: Partition) -> int:
    """n! / prod(mu'_j!), with mu' the conjugate partition.

    Rows of mu carry the x-exponent of Delta_mu, so the x-degree-zero part
    is counted by the column lengths: 1 for (1^n), n! for (n).
    """
    return factorial_quotient(mu.conjugate())


def arrangements(mu: Partition) -> Iterator[tuple[tuple[int, int], ...]]:
    """Bar orders allowed by the equal-depth rule, lex in (depth, height)."""
    bars = [b for b in biexponents(mu) if b != (0, 0)]
    # Input is sorted and duplicate free, so permutations() is already lex.
    for arr in permutations(bars):
        if all(
            not (arr[i][0] == arr[j][0] and arr[i][1] < arr[j][1])
            for i in range(len(arr))
            for j in range(i + 1, len(arr))
        ):
            yield arr


def enumerate_bars(mu: Partition) -> Iterator[BarDrawing]:
    """Every bar drawing of mu once: arrangements in lex order, then crossed_y vectors."""
    check_bound("bars", mu.n)
    for arr in arrangements(mu):
        ranges = []
        for i, (p, q) in enumerate(arr):
            need = max((qj + 1 for pj, qj in arr[i + 1:] if pj > p), default=0)
            if need > q:
                break
            ranges.append(range(q - need + 1))
        else:
            for crossed in product(*ranges):
                d = object.__new__(BarDrawing)
                object.__setattr__(d, "bars", tuple((p, q, c) for (p, q), c in zip(arr, crossed)))
                yield d


def bar_operators(d: BarDrawing) -> tuple[Monomial, Monomial]:
    """(S, M_T): the crossed-cell operator and the monomial of blank y-cells."""
    n = d.n
    sx, sy, ty = [0] * n, [0] * n, [0] * n
    for i, (p, q, c) in enumerate(d.bars):
        sx[i] = p
        sy[i] = c
        ty[i] = q - c
    return Monomial(tuple(sx), tuple(sy)), Monomial((0,) * n, tuple(ty))


@dataclass
class MzeroReport:
    mu: Partition
    count: int
    expected: int
    checks: dict = field(default_factory=dict)
    rank: RankReport | None = None
    failures: list = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            "mu": str(self.mu),
            "count": self.count,
            "expected": self.expected,
            "factorial_quotient": factorial_quotient(self.mu),
            "checks": dict(self.checks),
            "rank": self.rank.rank if self.rank else None,
            "rank_report": self.rank.to_json(include_timing) if self.rank else None,
            "failures": list(self.failures),
            "verified": self.verified,
        }


def verify_mzero(mu: Partition, threads: int = 1) -> MzeroReport:
    """Check that {d_S Delta_mu} over the bar drawings is a basis of M_mu^0.

    Checks, in order: count, x-degree zero, leading monomial equal to M_T up
    to sign, distinct M_T, exact rank.
    """
    drawings = list(enumerate_bars(mu))
    expected = mzero_dimension(mu)
    report = MzeroReport(mu, len(drawings), expected)
    report.checks["count"] = len(drawings) == expected
    ops = [bar_operators(d) for d in drawings]
    rows = list(derivative_rows(mu, [s for s, _ in ops], threads))
    n = mu.n
    xdeg_ok = lead_ok = True
    for d, (s, mt), row in zip(drawings, ops, rows):
        if not row or any(sum(k[:n]) for k in row._terms):
            xdeg_ok = False
            report.failures.append({"check": "x_degree_zero", "drawing": d.to_json()})
        if not row or row.lead_key() != mt.key:
            lead_ok = False
            report.failures.append({"check": "leading_monomial", "drawing": d.to_json()})
    report.checks["x_degree_zero"] = xdeg_ok
    report.checks["leading_monomial"] = lead_ok
    report.checks["distinct_M_T"] = len({mt for _, mt in ops}) == len(ops)
    report.rank = incremental_rank(rows, expected=expected)
    report.checks["rank"] = report.rank.rank == expected
    return report
