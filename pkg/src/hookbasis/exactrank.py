"""Exact streaming row reduction over Q, and the rank certificates built on it."""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .bounds import check_bound
from .errors import DimensionError, ParameterError
from .hookdrawings import enumerate_drawings, operators
from .polynomial import Monomial, Polynomial, _differentiate_terms, linear_combination, render
from .shapes import Partition, delta, nmu


@dataclass
class RankReport:
    rank: int
    row_count: int
    pivot_monomials: list[Monomial]
    dependent_row_ids: list[int]
    elapsed: float
    skipped_zero_rows: int = 0
    max_coefficient_bits: int = 0
    expected: int | None = None
    # None: not checked; True/False: dependent rows re-multiplied to zero or not.
    certified: bool | None = None

    @property
    def verified(self) -> bool:
        ok = self.expected is None or self.rank == self.expected
        return ok and self.certified is not False

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "rank": self.rank,
            "row_count": self.row_count,
            "expected": self.expected,
            "verified": self.verified,
            "pivot_monomials": [str(m) for m in self.pivot_monomials],
            "dependent_row_ids": list(self.dependent_row_ids),
            "skipped_zero_rows": self.skipped_zero_rows,
            "max_coefficient_bits": self.max_coefficient_bits,
            "certified": self.certified,
        }
        if include_timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _bits(c) -> int:
    if isinstance(c, int):
        return abs(c).bit_length()
    return max(abs(c.numerator).bit_length(), c.denominator.bit_length())


@dataclass
class _Pivot:
    terms: dict
    combo: dict | None


class EchelonBasis:
    """Rows keyed by distinct lex-leading monomials, each scaled to lead coefficient 1.

    With ``track=True`` every stored row also remembers how it was formed
    from the input rows, so a dependent row yields an explicit relation.
    """

    def __init__(self, n: int, track: bool = False):
        self.n = n
        self.track = track
        self.pivots: dict[tuple, _Pivot] = {}
        self.max_bits = 0

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, terms: dict, row_id: int | None = None) -> tuple[dict, dict | None]:
        """Top-reduce ``terms``; returns (remainder, combination of input rows)."""
        rem = dict(terms)
        combo = {row_id: Fraction(1)} if self.track else None
        pivots = self.pivots
        while rem:
            lead = max(rem)
            piv = pivots.get(lead)
            if piv is None:
                break
            c = rem[lead]
            for k, v in piv.terms.items():
                s = rem.get(k, 0) - c * v
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
            if combo is not None:
                for rid, v in piv.combo.items():
                    s = combo.get(rid, 0) - c * v
                    if s:
                        combo[rid] = s
                    else:
                        combo.pop(rid, None)
        return rem, combo

    def add(self, row: Polynomial, row_id: int | None = None) -> tuple[bool, dict | None]:
        """Insert a row; returns (increased_rank, relation-if-dependent)."""
        if row.n != self.n:
            raise DimensionError(f"row has n={row.n}, basis has n={self.n}")
        rem, combo = self.reduce(row._terms, row_id)
        if not rem:
            return False, combo
        lead = max(rem)
        inv = Fraction(1) / rem[lead]
        terms = {k: v * inv for k, v in rem.items()}
        for v in terms.values():
            b = _bits(v)
            if b > self.max_bits:
                self.max_bits = b
        if combo is not None:
            combo = {rid: v * inv for rid, v in combo.items()}
        self.pivots[lead] = _Pivot(terms, combo)
        return True, None

    def pivot_monomials(self) -> list[Monomial]:
        return [Monomial.from_key(k) for k in sorted(self.pivots, reverse=True)]


def incremental_rank(
    rows: Iterable[Polynomial],
    certify: bool = False,
    expected: int | None = None,
) -> RankReport:
    """Rank of a stream of polynomials by exact top-reduction.

    Zero rows are skipped (and counted).  With ``certify`` every dependent
    row's relation is recomputed from the original rows and must vanish.
    """
    start = time.perf_counter()
    basis: EchelonBasis | None = None
    originals: dict[int, Polynomial] = {}
    relations = []
    dependent = []
    row_count = zeros = 0
    for row in rows:
        if basis is None:
            basis = EchelonBasis(row.n, track=certify)
        if not row:
            zeros += 1
            continue
        row_id = row_count
        row_count += 1
        if certify:
            originals[row_id] = row
        grew, relation = basis.add(row, row_id)
        if not grew:
            dependent.append(row_id)
            if certify:
                relations.append(relation)
    certified = None
    if certify:
        certified = all(
            not linear_combination(basis.n, ((c, originals[rid]) for rid, c in rel.items()))
            for rel in relations
        )
    return RankReport(
        rank=len(basis) if basis else 0,
        row_count=row_count,
        pivot_monomials=basis.pivot_monomials() if basis else [],
        dependent_row_ids=dependent,
        elapsed=time.perf_counter() - start,
        skipped_zero_rows=zeros,
        max_coefficient_bits=basis.max_bits if basis else 0,
        expected=expected,
        certified=certified,
    )


# -- derivative rows -----------------------------------------------------------

_WORKER_DELTA: dict = {}


def _init_worker(parts: tuple[int, ...]) -> None:
    _WORKER_DELTA["terms"] = delta(Partition(parts))._terms


def _derive(key: tuple[int, ...]) -> dict:
    out = _differentiate_terms(_WORKER_DELTA["terms"], key)
    return {k: c for k, c in out.items() if c}


def default_threads() -> int:
    return os.cpu_count() or 1


def derivative_rows(
    mu: Partition, ops: Sequence[Monomial], threads: int = 1
) -> Iterator[Polynomial]:
    """d^op Delta_mu for each operator, in input order.

    With ``threads > 1`` the derivatives are computed in worker processes;
    ``map`` keeps the output order, so results do not depend on the count.
    """
    n = mu.n
    keys = [op.key for op in ops]
    if threads <= 1 or len(keys) < 64:
        terms = delta(mu)._terms
        for key in keys:
            out = _differentiate_terms(terms, key)
            yield Polynomial._raw(n, {k: c for k, c in out.items() if c})
        return
    chunk = max(1, len(keys) // (threads * 8))
    with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(mu.parts,)) as pool:
        for out in pool.map(_derive, keys, chunksize=chunk):
            yield Polynomial._raw(n, out)


def _require_hook(mu: Partition) -> tuple[int, int]:
    if not mu.is_hook:
        raise ParameterError(f"{mu} is not a hook partition")
    return mu.arms


def drawing_operators(mu: Partition) -> list[Monomial]:
    """S-operators of all drawings, in enumeration order."""
    K, L = _require_hook(mu)
    return [operators(d)[0] for d in enumerate_drawings(K, L)]


def verify_independence(mu: Partition, threads: int = 1, certify: bool = False) -> RankReport:
    """Rank of {d_S Delta_mu} over all drawings; independence means rank n!."""
    _require_hook(mu)
    check_bound("independence", mu.n)
    ops = drawing_operators(mu)
    return incremental_rank(
        derivative_rows(mu, ops, threads), certify=certify, expected=math.factorial(mu.n)
    )


def elimination_key(m: Monomial) -> tuple[int, ...]:
    """Lex key with variables reversed: x_n, ..., x_1, y_n, ..., y_1."""
    return m.xexp[::-1] + m.yexp[::-1]


def span_operators(mu: Partition) -> list[Monomial]:
    """Monomial operators that can survive on Delta_mu for a hook.

    Exponents are bounded per variable by L (x) and K (y), and in total by
    the bidegree of Delta_mu.  Sorted increasingly by ``elimination_key``.
    """
    K, L = _require_hook(mu)
    n = mu.n
    xmax, ymax = nmu(mu), nmu(mu.conjugate())
    xs = [a for a in product(range(L + 1), repeat=n) if sum(a) <= xmax]
    ys = [b for b in product(range(K + 1), repeat=n) if sum(b) <= ymax]
    ops = [Monomial(a, b) for a in xs for b in ys]
    ops.sort(key=elimination_key)
    return ops


def verify_span(mu: Partition, threads: int = 1, certify: bool = False) -> RankReport:
    """Rank of all monomial derivatives of Delta_mu; spanning means rank n!."""
    _require_hook(mu)
    check_bound("span", mu.n)
    ops = span_operators(mu)
    return incremental_rank(
        derivative_rows(mu, ops, threads), certify=certify, expected=math.factorial(mu.n)
    )


def sparse_triplets(rows: Iterable[Polynomial]) -> Iterator[tuple[int, str, str]]:
    """(row, monomial, coefficient) triplets for external audit."""
    for i, row in enumerate(rows):
        for m, c in row.items():
            yield i, str(m), render(Polynomial.constant(0, c))
