"""Exact monomial bases for the n! conjecture modules of hook shapes."""

__version__ = "0.1.0"

from .errors import DimensionError, ParameterError, ResourceError
from .polynomial import (
    Monomial,
    Polynomial,
    apply_diff_operator,
    differentiate,
    h_complete,
    leading_monomial,
    mono_cmp_lex,
    parse,
    partial_derivative,
    poly_add,
    poly_mul,
    poly_scale,
    render,
)
from .shapes import Partition, biexponents, delta, factorial_quotient, hooks, nmu, partitions
from .hookdrawings import (
    HookDrawing,
    children_graph,
    count_formula,
    enumerate_drawings,
    flip,
    flip_child_duality,
    is_acyclic,
    is_child,
    is_complete_prefix,
    operators,
    superpose,
)
from .annihilator import annihilates, proposition_witness, theorem2_generators
from .exactrank import RankReport, incremental_rank, verify_independence, verify_span
from .degzero import BarDrawing, bar_operators, enumerate_bars, mzero_dimension, verify_mzero

__all__ = [
    "DimensionError",
    "ParameterError",
    "ResourceError",
    "Monomial",
    "Polynomial",
    "apply_diff_operator",
    "differentiate",
    "h_complete",
    "leading_monomial",
    "mono_cmp_lex",
    "parse",
    "partial_derivative",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "render",
    "Partition",
    "biexponents",
    "delta",
    "factorial_quotient",
    "hooks",
    "nmu",
    "partitions",
    "HookDrawing",
    "children_graph",
    "count_formula",
    "enumerate_drawings",
    "flip",
    "flip_child_duality",
    "is_acyclic",
    "is_child",
    "is_complete_prefix",
    "operators",
    "superpose",
    "annihilates",
    "proposition_witness",
    "theorem2_generators",
    "RankReport",
    "incremental_rank",
    "verify_independence",
    "verify_span",
    "BarDrawing",
    "bar_operators",
    "enumerate_bars",
    "mzero_dimension",
    "verify_mzero",
]
