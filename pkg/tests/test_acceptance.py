"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS`` or ``FAIL`` line (also
collected into the pytest terminal summary) and then asserts.  Parts of a
criterion that take minutes are separate tests marked ``extended``.
"""

import math

import pytest

from conftest import ACCEPTANCE_LINES
from hookbasis.annihilator import observation4_check, verify_generators, verify_propositions
from hookbasis.cli import DEFAULT_SEED
from hookbasis.degzero import mzero_dimension, verify_mzero
from hookbasis.exactrank import verify_independence, verify_span
from hookbasis.hookdrawings import (
    children_graph,
    count_drawings,
    count_formula,
    enumerate_drawings,
    flip,
    flip_child_duality,
    is_acyclic,
    sample_pairs,
)
from hookbasis.polynomial import apply_diff_operator, parse, render
from hookbasis.shapes import Partition, delta, factorial_quotient, hooks, partitions


def report(label, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {label}: {status}"
    if failures:
        shown = ", ".join(map(str, failures[:5]))
        line += f" ({len(failures)} failing: {shown}{', ...' if len(failures) > 5 else ''})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def hook_range(lo, hi):
    return [mu for n in range(lo, hi + 1) for mu in hooks(n)]


def test_criterion_1_counting():
    failures = []
    for mu in hook_range(1, 8):
        K, L = mu.arms
        listed = sum(1 for _ in enumerate_drawings(K, L))
        if not listed == count_drawings(K, L) == count_formula(K, L) == math.factorial(mu.n):
            failures.append(str(mu))
    report("1 (counting, hooks n<=8)", failures)


def _independence(lo, hi):
    return [str(mu) for mu in hook_range(lo, hi)
            if verify_independence(mu).rank != math.factorial(mu.n)]


def test_criterion_2_independence():
    report("2 (independence, hooks n<=5)", _independence(1, 5))


@pytest.mark.extended
def test_criterion_2_independence_extended():
    report("2 (independence, hooks n=6, extended)", _independence(6, 6))


def test_criterion_3_span():
    failures = [str(mu) for mu in hook_range(1, 5)
                if verify_span(mu).rank != math.factorial(mu.n)]
    report("3 (span, hooks n<=5)", failures)


def test_criterion_4_ideal_membership():
    failures = []
    for mu in hook_range(1, 7):
        r = verify_generators(mu)
        failures += [(str(mu), c) for c in r.counterexamples]
    for mu in hook_range(1, 6):
        for r in (verify_propositions(mu, 100, DEFAULT_SEED),
                  observation4_check(mu, 100, DEFAULT_SEED)):
            failures += [(str(mu), c) for c in r.counterexamples]
    report("4 (ideal membership: generators n<=7, propositions and observation 4 n<=6)",
           failures)


def _mzero_literal(lo, hi, threads=1):
    """Every sub-check, against n!/mu! with mu! = prod(mu_i!) as the criterion states."""
    failures = []
    for n in range(lo, hi + 1):
        for mu in partitions(n):
            r = verify_mzero(mu, threads=threads)
            target = factorial_quotient(mu)
            bad = [k for k, ok in r.checks.items() if not ok]
            if r.count != target:
                bad.append(f"count {r.count} != {target}")
            if r.rank.rank != target:
                bad.append(f"rank {r.rank.rank} != {target}")
            if bad:
                failures.append(f"{mu}: {'; '.join(bad)}")
    return failures


def test_criterion_5_mzero():
    report("5 (M0 basis, all partitions n<=6, dimension n!/prod(mu_i!))", _mzero_literal(1, 6))


def test_criterion_5_mzero_conjugate_reading():
    """Same checks with the dimension n!/prod(mu'_j!) that the computation supports."""
    failures = []
    for n in range(1, 7):
        for mu in partitions(n):
            r = verify_mzero(mu)
            if not r.verified or r.count != r.rank.rank or r.count != mzero_dimension(mu):
                failures.append(str(mu))
    report("5 (M0 basis, n<=6, conjugate reading n!/prod(mu'_j!), informational)", failures)


@pytest.mark.extended
def test_criterion_5_mzero_extended():
    report("5 (M0 basis, all partitions n=7, extended)", _mzero_literal(7, 7, threads=4))


def test_criterion_6_acyclicity():
    failures = [str(mu) for mu in hook_range(1, 5) if not is_acyclic(children_graph(*mu.arms))]
    edges = len(children_graph(1, 1).edges)
    if edges != 0:
        failures.append(f"(2,1) has {edges} edges")
    report("6 (descendant acyclicity, hooks n<=5; (2,1) has no edges)", failures)


def test_criterion_7_flip():
    failures = []
    for mu in hook_range(1, 5):
        K, L = mu.arms
        ds = list(enumerate_drawings(K, L))
        if {flip(d) for d in ds} != set(ds) or any(flip(flip(d)) != d for d in ds):
            failures.append(f"{mu}: flip not an involution")
        if mu.n <= 4:
            pairs = [(a, b) for a in ds for b in ds if a != b]
        else:
            pairs = sample_pairs(K, L, 1000, DEFAULT_SEED)
            if len(pairs) != 1000:
                failures.append(f"{mu}: {len(pairs)} sampled pairs")
        bad = sum(1 for a, b in pairs if not flip_child_duality(a, b, mu))
        if bad:
            failures.append(f"{mu}: duality fails on {bad} pairs")
    report("7 (flip involution and child duality, n<=4 exhaustive, n=5 sampled)", failures)


def test_criterion_8_fixtures():
    mu = Partition((2, 1))
    d = delta(mu)
    listed = parse("y2*x3 - y3*x2 - y1*x3 + y3*x1 + y1*x2 - y2*x1", 3)
    checks = {
        "delta": (render(d), render(listed)),
        "d_x2": (render(apply_diff_operator(parse("x2", 3), d)), "1*y1 - 1*y3"),
        "d_x1_d_y2": (render(apply_diff_operator(parse("x1*y2", 3), d)), "-1"),
    }
    failures = [f"{name}: {got!r} != {want!r}" for name, (got, want) in checks.items() if got != want]
    if len(d) != 6:
        failures.append(f"delta has {len(d)} terms")
    report("8 (fixture identities for (2,1))", failures)
