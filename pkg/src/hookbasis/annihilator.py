"""Elements of the annihilator ideal I_mu of Delta_mu.

P belongs to I_mu when P(d) Delta_mu = 0.  For a hook (K+1, 1^L) the ideal
is generated by the complete functions h_i in all x's and in all y's, the
products x_i y_i, and the squarefree monomials of degree L+1 in x and K+1
in y.  The propositions below give further families, checked the same way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ParameterError
from .exactrank import EchelonBasis, derivative_rows, drawing_operators, elimination_key, span_operators
from .polynomial import (
    X,
    Y,
    Monomial,
    Polynomial,
    apply_diff_operator,
    h_complete,
    linear_combination,
    monomial_product,
)
from .shapes import Partition, delta

KINDS = (
    "h_x",
    "h_y",
    "xy_diag",
    "squarefree_x",
    "squarefree_y",
    "prop1",
    "prop2",
    "prop3a",
    "prop3b",
    "power_x",
    "power_y",
    "diag_power",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """A named polynomial family member.

    ``xs``/``ys`` are 1-based index sets; ``ys_outer`` is the larger set Y'
    of the second proposition.  ``k`` and ``l`` are degrees.
    """

    kind: str
    k: int = 0
    l: int = 0
    xs: tuple[int, ...] = ()
    ys: tuple[int, ...] = ()
    ys_outer: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown generator kind {self.kind!r}")
        for name in ("xs", "ys", "ys_outer"):
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        for name in ("k", "l"):
            if getattr(self, name):
                out[name] = getattr(self, name)
        for name in ("xs", "ys", "ys_outer"):
            if getattr(self, name):
                out[name] = list(getattr(self, name))
        return out

    def polynomial(self, n: int) -> Polynomial:
        """Build the polynomial without checking any side condition."""
        kind = self.kind
        if kind == "h_x":
            return h_complete(self.k, X, self.xs, n)
        if kind == "h_y":
            return h_complete(self.k, Y, self.ys, n)
        if kind == "xy_diag":
            (i,) = self.xs
            return Polynomial.from_monomial(Monomial.variable(n, X, i) * Monomial.variable(n, Y, i))
        if kind == "squarefree_x":
            return monomial_product(n, X, self.xs)
        if kind == "squarefree_y":
            return monomial_product(n, Y, self.ys)
        if kind == "prop1":
            return h_complete(self.k, Y, self.ys, n)
        if kind == "prop2":
            return monomial_product(n, Y, self.ys) * h_complete(self.k, Y, self.ys_outer, n)
        if kind in ("prop3a", "prop3b"):
            return h_complete(self.k, Y, self.ys, n) * h_complete(self.l, X, self.xs, n)
        # Power sums and polarized power sums sum_i x_i^k y_i^l.
        idx = range(1, n + 1)
        k, l = (self.k, 0) if kind == "power_x" else (0, self.k) if kind == "power_y" else (self.k, self.l)
        terms = {}
        for i in idx:
            key = [0] * (2 * n)
            key[i - 1] = k
            key[n + i - 1] = l
            terms[tuple(key)] = 1
        return Polynomial(n, terms)


def _require_hook(mu: Partition) -> tuple[int, int]:
    if not mu.is_hook:
        raise ParameterError(f"{mu} is not a hook partition")
    return mu.arms


def theorem2_specs(mu: Partition) -> list[GeneratorSpec]:
    K, L = _require_hook(mu)
    n = mu.n
    every = tuple(range(1, n + 1))
    specs = [GeneratorSpec("h_x", k=i, xs=every) for i in range(1, n + 1)]
    specs += [GeneratorSpec("h_y", k=i, ys=every) for i in range(1, n + 1)]
    specs += [GeneratorSpec("xy_diag", xs=(i,)) for i in every]
    specs += [GeneratorSpec("squarefree_x", xs=c) for c in combinations(every, L + 1)]
    specs += [GeneratorSpec("squarefree_y", ys=c) for c in combinations(every, K + 1)]
    return specs


def theorem2_generators(mu: Partition) -> list[Polynomial]:
    """Generators of I_mu for a hook, in a fixed order."""
    return [s.polynomial(mu.n) for s in theorem2_specs(mu)]


def annihilates(p: Polynomial, mu: Partition) -> bool:
    return apply_diff_operator(p, delta(mu)).is_zero()


def check_proposition(spec: GeneratorSpec, mu: Partition) -> None:
    """Raise ParameterError unless ``spec`` meets its proposition's side conditions."""
    K, _ = _require_hook(mu)
    n = mu.n
    k, l = spec.k, spec.l
    ys, xs, outer = set(spec.ys), set(spec.xs), set(spec.ys_outer)
    for idx in (ys, xs, outer):
        if any(not 1 <= i <= n for i in idx):
            raise ParameterError(f"index out of range 1..{n} in {spec}")
    kind = spec.kind
    if kind == "prop1":
        ok = k > 0 and ys and k + len(ys) > n
    elif kind == "prop2":
        ok = k > 0 and outer and k + len(ys) > K and ys <= outer
    elif kind == "prop3a":
        ok = k > 0 and l > 0 and ys and ys <= xs and k + l + len(ys) > n
    elif kind == "prop3b":
        ok = k > 0 and l > 0 and xs and xs <= ys and k + l + len(xs) > n
    else:
        raise ParameterError(f"{kind} is not a proposition")
    if not ok:
        raise ParameterError(f"side conditions fail for {spec.to_json()} with mu={mu}")


def proposition_witness(spec: GeneratorSpec, mu: Partition) -> Polynomial:
    """The polynomial a proposition asserts to lie in I_mu."""
    check_proposition(spec, mu)
    return spec.polynomial(mu.n)


def _random_subset(rng: random.Random, n: int, lo: int, hi: int) -> tuple[int, ...]:
    size = rng.randint(lo, hi)
    return tuple(sorted(rng.sample(range(1, n + 1), size)))


def random_proposition_spec(kind: str, mu: Partition, rng: random.Random) -> GeneratorSpec:
    """A random parameter choice satisfying the side conditions of ``kind``."""
    K, _ = _require_hook(mu)
    n = mu.n
    if kind == "prop1":
        ys = _random_subset(rng, n, 1, n)
        k = rng.randint(n - len(ys) + 1, n - len(ys) + 3)
        spec = GeneratorSpec(kind, k=k, ys=ys)
    elif kind == "prop2":
        outer = _random_subset(rng, n, 1, n)
        ys = tuple(sorted(rng.sample(outer, rng.randint(0, len(outer)))))
        k = rng.randint(max(1, K - len(ys) + 1), max(1, K - len(ys) + 1) + 2)
        spec = GeneratorSpec(kind, k=k, ys=ys, ys_outer=outer)
    elif kind in ("prop3a", "prop3b"):
        big = _random_subset(rng, n, 1, n)
        small = tuple(sorted(rng.sample(big, rng.randint(1, len(big)))))
        floor = max(2, n - len(small) + 1)
        total = rng.randint(floor, floor + 2)
        k = rng.randint(1, total - 1)
        if kind == "prop3a":
            spec = GeneratorSpec(kind, k=k, l=total - k, ys=small, xs=big)
        else:
            spec = GeneratorSpec(kind, k=k, l=total - k, xs=small, ys=big)
    else:
        raise ParameterError(f"{kind} is not a proposition")
    check_proposition(spec, mu)
    return spec


@dataclass
class AnnihilationReport:
    mu: Partition
    entries: list = field(default_factory=list)  # (label dict, annihilates)

    @property
    def counterexamples(self) -> list:
        return [label for label, ok in self.entries if not ok]

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "mu": str(self.mu),
            "checked": len(self.entries),
            "results": [{"generator": label, "annihilates": ok} for label, ok in self.entries],
            "verified": self.verified,
        }


def verify_generators(mu: Partition) -> AnnihilationReport:
    report = AnnihilationReport(mu)
    for spec in theorem2_specs(mu):
        report.entries.append((spec.to_json(), annihilates(spec.polynomial(mu.n), mu)))
    return report


def verify_propositions(mu: Partition, samples: int, seed: int) -> AnnihilationReport:
    """``samples`` random instances of each proposition, reproducible from ``seed``."""
    rng = random.Random(seed)
    report = AnnihilationReport(mu)
    for kind in ("prop1", "prop2", "prop3a", "prop3b"):
        for _ in range(samples):
            spec = random_proposition_spec(kind, mu, rng)
            report.entries.append((spec.to_json(), annihilates(proposition_witness(spec, mu), mu)))
    return report


def observation4_check(mu: Partition, samples: int, seed: int) -> AnnihilationReport:
    """Non-constant symmetric witnesses must annihilate Delta_mu.

    Draws power sums in x, in y, and polarized sums sum_i x_i^r y_i^s with
    r + s >= 1 and exponents up to 3.
    """
    rng = random.Random(seed)
    report = AnnihilationReport(mu)
    for _ in range(samples):
        kind = rng.choice(("power_x", "power_y", "diag_power"))
        if kind == "diag_power":
            r, s = 0, 0
            while r + s == 0:
                r, s = rng.randint(0, 3), rng.randint(0, 3)
            spec = GeneratorSpec(kind, k=r, l=s)
        else:
            spec = GeneratorSpec(kind, k=rng.randint(1, 3))
        report.entries.append((spec.to_json(), annihilates(spec.polynomial(mu.n), mu)))
    return report


def ideal_products(mu: Partition, samples: int, seed: int, max_degree: int = 3) -> AnnihilationReport:
    """Generators times random monomials must stay in I_mu."""
    rng = random.Random(seed)
    n = mu.n
    specs = theorem2_specs(mu)
    report = AnnihilationReport(mu)
    for _ in range(samples):
        spec = rng.choice(specs)
        key = [0] * (2 * n)
        for _ in range(rng.randint(0, max_degree)):
            key[rng.randrange(2 * n)] += 1
        factor = Polynomial(n, {tuple(key): 1})
        label = {"generator": spec.to_json(), "times": str(Monomial.from_key(tuple(key)))}
        report.entries.append((label, annihilates(spec.polynomial(n) * factor, mu)))
    return report


@dataclass
class EliminationWitness:
    """For every non-drawing operator m, a member of I_mu whose leading term is m.

    Leading terms are taken for ``elimination_key`` (lex with the variables
    reversed), under which the drawing operators are exactly the operators
    that cannot be eliminated.
    """

    mu: Partition
    standard: list[Monomial]
    relations: dict[Monomial, Polynomial]

    def drawing_operators_are_standard(self) -> bool:
        return set(self.standard) == set(drawing_operators(self.mu))


def elimination_witness(mu: Partition) -> EliminationWitness:
    ops = span_operators(mu)
    n = mu.n
    basis = EchelonBasis(n, track=True)
    standard = []
    relations = {}
    for idx, (op, row) in enumerate(zip(ops, derivative_rows(mu, ops))):
        grew, combo = basis.add(row, idx)
        if grew:
            standard.append(op)
            continue
        # The relation sum_c d^op_i Delta = 0 read as an operator polynomial.
        relation = linear_combination(
            n, ((c, Polynomial.from_monomial(ops[i])) for i, c in combo.items())
        )
        relations[op] = relation
    return EliminationWitness(mu, standard, relations)


def leading_key(p: Polynomial, key=elimination_key) -> Monomial:
    return max((m for m, _ in p.items()), key=key)
