from itertools import permutations, product

import pytest

from hookbasis.degzero import (
    BarDrawing,
    arrangements,
    bar_operators,
    enumerate_bars,
    mzero_dimension,
    verify_mzero,
)
from hookbasis.exactrank import derivative_rows, incremental_rank
from hookbasis.polynomial import Monomial
from hookbasis.shapes import Partition, biexponents, delta, partitions

SMALL = [mu for n in range(1, 6) for mu in partitions(n)]


def brute_bars(mu):
    """All orders and all crossed counts, filtered by the two rules."""
    bars = [b for b in biexponents(mu) if b != (0, 0)]
    found = set()
    for arr in permutations(bars):
        for crossed in product(*(range(q + 1) for _, q in arr)):
            full = tuple((p, q, c) for (p, q), c in zip(arr, crossed))
            ok = True
            for i, (pi, qi, ci) in enumerate(full):
                for pj, qj, _ in full[i + 1:]:
                    if pi == pj and qi < qj:
                        ok = False
                    if pj > pi and qi - ci <= qj:
                        ok = False
            if ok:
                found.add(full)
    return found


def mzero_oracle(mu):
    """Rank of every x-free monomial derivative of Delta_mu."""
    d = delta(mu)
    n = mu.n
    xs = {k[:n] for k in d.terms}
    ymax = max(max(k[n:]) for k in d.terms)
    ops = [Monomial(a, b) for a in sorted(xs) for b in product(range(ymax + 1), repeat=n)]
    rows = [r for r in derivative_rows(mu, ops) if r and all(not any(k[:n]) for k in r.terms)]
    return incremental_rank(rows).rank


def test_examples():
    assert sum(1 for _ in enumerate_bars(Partition((2, 1)))) == 3
    assert sum(1 for _ in enumerate_bars(Partition((1, 1)))) == 1
    assert sum(1 for _ in enumerate_bars(Partition((3,)))) == 6
    assert sum(1 for _ in enumerate_bars(Partition((1, 1, 1)))) == 1


def test_enumeration_21_contents():
    got = [d.bars for d in enumerate_bars(Partition((2, 1)))]
    assert got == [((0, 1, 0), (1, 0, 0)), ((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 1, 1))]


@pytest.mark.parametrize("mu", SMALL, ids=str)
def test_enumeration_matches_brute_force(mu):
    ours = [d.bars for d in enumerate_bars(mu)]
    assert len(set(ours)) == len(ours)
    assert set(ours) == brute_bars(mu)


@pytest.mark.parametrize("mu", [m for n in range(1, 5) for m in partitions(n)], ids=str)
def test_dimension_matches_oracle(mu):
    assert mzero_dimension(mu) == mzero_oracle(mu)


def test_dimension_examples():
    assert mzero_dimension(Partition((3,))) == 6
    assert mzero_dimension(Partition((1, 1, 1))) == 1
    assert mzero_dimension(Partition((2, 2))) == 6
    assert mzero_dimension(Partition((3, 1))) == 12


def test_bar_operators_example():
    d = BarDrawing(((0, 1, 0), (1, 0, 0)))
    s, mt = bar_operators(d)
    assert str(s) == "x2"
    assert str(mt) == "y1"
    d = BarDrawing(((1, 0, 0), (0, 1, 1)))
    s, mt = bar_operators(d)
    assert str(s) == "x1*y2"
    assert str(mt) == "1"


def test_invalid_bars_rejected():
    with pytest.raises(ValueError):
        BarDrawing(((0, 1, 1), (1, 0, 0)))  # needs a blank y-cell left of a deeper bar
    with pytest.raises(ValueError):
        BarDrawing(((0, 1, 0), (0, 2, 0)))  # equal depth, increasing height
    with pytest.raises(ValueError):
        BarDrawing(((0, 1, 2),))


def test_json_round_trip():
    for d in enumerate_bars(Partition((2, 2))):
        assert BarDrawing.from_json(d.to_json()) == d


def test_arrangements_respect_equal_depth_rule():
    for arr in arrangements(Partition((3, 1))):
        for i, (p, q) in enumerate(arr):
            assert all(not (p == pj and q < qj) for pj, qj in arr[i + 1:])


@pytest.mark.parametrize("mu", [m for n in range(1, 7) for m in partitions(n)], ids=str)
def test_verify_mzero(mu):
    report = verify_mzero(mu)
    assert report.verified, report.failures
    assert report.count == report.rank.rank == mzero_dimension(mu)


def test_verify_mzero_22():
    report = verify_mzero(Partition((2, 2)))
    assert report.count == 6 and report.rank.rank == 6
    data = report.to_json()
    assert data["checks"] == {
        "count": True,
        "x_degree_zero": True,
        "leading_monomial": True,
        "distinct_M_T": True,
        "rank": True,
    }


@pytest.mark.parametrize("mu", [m for n in range(2, 6) for m in partitions(n)], ids=str)
def test_triangular(mu):
    """Sorting rows by M_T gives a triangular matrix with nonzero diagonal."""
    ds = list(enumerate_bars(mu))
    ops = [bar_operators(d) for d in ds]
    rows = list(derivative_rows(mu, [s for s, _ in ops]))
    pairs = sorted(zip((mt.key for _, mt in ops), rows), reverse=True)
    for i, (key, row) in enumerate(pairs):
        assert row.coefficient(key) != 0
        for later_key, _ in pairs[:i]:
            assert row.coefficient(later_key) == 0


@pytest.mark.extended
@pytest.mark.parametrize("mu", list(partitions(7)), ids=str)
def test_verify_mzero_n7(mu):
    assert verify_mzero(mu, threads=4).verified
