import math
import random

import pytest
import sympy

from hookbasis.errors import ResourceError
from hookbasis.polynomial import Polynomial, parse, poly_mul
from hookbasis.shapes import (
    Partition,
    biexponents,
    delta,
    factorial_quotient,
    hooks,
    nmu,
    partitions,
)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition(())


def test_parse_and_render_round_trip():
    mu = Partition.parse("3,1,1")
    assert mu.parts == (3, 1, 1) and str(mu) == "3,1,1"
    with pytest.raises(ValueError):
        Partition.parse("3,a")


def test_hooks_and_arms():
    assert Partition.hook(2, 2) == Partition((3, 1, 1))
    assert Partition((3, 1, 1)).arms == (2, 2)
    assert not Partition((2, 2)).is_hook
    assert [str(m) for m in hooks(3)] == ["1,1,1", "2,1", "3"]


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_conjugate():
    assert Partition((3, 1, 1)).conjugate() == Partition((3, 1, 1))
    assert Partition((4, 2)).conjugate() == Partition((2, 2, 1, 1))


def test_biexponents_examples():
    assert biexponents(Partition((1, 1))) == [(0, 0), (1, 0)]
    assert biexponents(Partition((2, 1))) == [(0, 0), (0, 1), (1, 0)]
    assert biexponents(Partition((3, 1, 1))) == [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]


def test_delta_examples():
    assert delta(Partition((1, 1))) == parse("x2 - x1", 2)
    assert delta(Partition((2,))) == parse("y2 - y1", 2)
    listed = "y2*x3 - y3*x2 - y1*x3 + y3*x1 + y1*x2 - y2*x1"
    assert delta(Partition((2, 1))) == parse(listed, 3)


def _sympy_delta(mu):
    n = mu.n
    xs = sympy.symbols(f"x1:{n + 1}")
    ys = sympy.symbols(f"y1:{n + 1}")
    pairs = biexponents(mu)
    m = sympy.Matrix(n, n, lambda i, j: xs[i] ** pairs[j][0] * ys[i] ** pairs[j][1])
    return sympy.Poly(sympy.expand(m.det(method="berkowitz")), *xs, *ys)


@pytest.mark.parametrize("mu", [m for n in range(1, 5) for m in partitions(n)], ids=str)
def test_delta_matches_sympy_determinant(mu):
    expected = {k: int(c) for k, c in _sympy_delta(mu).terms()}
    assert delta(mu).terms == expected


@pytest.mark.parametrize("mu", [m for n in range(1, 7) for m in partitions(n)], ids=str)
def test_delta_shape(mu):
    d = delta(mu)
    n = mu.n
    assert len(d) == math.factorial(n)
    assert set(d.terms.values()) <= {1, -1}
    assert d.bidegrees() == {(nmu(mu), nmu(mu.conjugate()))}


def _vandermonde(n, axis):
    v = Polynomial.constant(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = poly_mul(v, Polynomial.variable(n, axis, j) - Polynomial.variable(n, axis, i))
    return v


@pytest.mark.parametrize("n", range(1, 7))
def test_extreme_shapes_are_vandermonde(n):
    assert delta(Partition((1,) * n)) == _vandermonde(n, "x")
    assert delta(Partition((n,))) == _vandermonde(n, "y")


def _swap(p, i, j):
    n = p.n
    terms = {}
    for key, c in p.terms.items():
        k = list(key)
        for off in (0, n):
            k[off + i], k[off + j] = k[off + j], k[off + i]
        terms[tuple(k)] = c
    return Polynomial(n, terms)


@pytest.mark.parametrize("mu", [m for n in range(2, 7) for m in partitions(n)], ids=str)
def test_delta_antisymmetric(mu):
    rng = random.Random(str(mu))
    d = delta(mu)
    for _ in range(3):
        i, j = rng.sample(range(mu.n), 2)
        assert _swap(d, i, j) == -d


def test_nmu_examples():
    assert nmu(Partition((4,))) == 0
    assert nmu(Partition((1, 1, 1))) == 3
    assert nmu(Partition((2, 1))) == 1


def test_factorial_quotient_examples():
    assert factorial_quotient(Partition((2, 1))) == 3
    assert factorial_quotient(Partition((1, 1, 1))) == 6
    assert factorial_quotient(Partition((3, 2, 1))) == 60


def test_delta_resource_bound(monkeypatch):
    monkeypatch.setenv("HOOKBASIS_BOUNDS", "delta=3")
    delta.cache_clear()
    try:
        with pytest.raises(ResourceError):
            delta(Partition((2, 2)))
    finally:
        delta.cache_clear()


def test_bad_bound_override(monkeypatch):
    monkeypatch.setenv("HOOKBASIS_BOUNDS", "nonsense=3")
    delta.cache_clear()
    with pytest.raises(ValueError):
        delta(Partition((2, 2)))
    delta.cache_clear()
