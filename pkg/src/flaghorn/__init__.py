"""Exact Schubert calculus on type A partial flag manifolds: a polynomial
intersection oracle, Levi-movability decision procedures, and the
factorization of movable structure constants into Grassmannian
Littlewood-Richardson numbers."""

from .factor import (
    FactorizationTree,
    GrassmannianFactor,
    check_induced_movability,
    factor_full,
    factor_once,
    pairwise_factor,
)
from .flags import (
    FlagType,
    check_class_tuple,
    check_minimal_rep,
    codim,
    complete_flag,
    dual,
    enumerate_flag_types,
    enumerate_minimal_reps,
    fiber_flag,
    fiber_reduction,
    flatten_pair,
    grassmannian_flag,
    is_minimal_rep,
    pair_grassmannian,
    parabolic_longest,
    project_to_step,
    projected_codim,
    restrict_to_fiber,
)
from .grassmann import (
    Partition,
    check_condition_iii,
    check_condition_iv,
    format_partition,
    horn_inequality_holds,
    lr_coefficient,
    lr_expand,
    parse_partition,
    partition_from_perm,
    partitions_in_rectangle,
    perm_from_partition,
    product_to_point,
)
from .levi import (
    MovabilityReport,
    bk_product,
    bk_structure_constant,
    check_condition_i,
    enumerate_levi_movable,
    exact_degree_tuples,
    is_levi_movable,
)
from .oracle import (
    expand_in_schubert_basis,
    intersection_number,
    monk_expansion,
    schubert_polynomial,
    structure_constants_pair,
)
from .perm import (
    Perm,
    compose,
    descent_set,
    flatten,
    format_permutation,
    identity,
    inverse,
    lehmer_code,
    length,
    longest_element,
    pad,
    parse_permutation,
    perm_from_lehmer,
    trim,
)
from .poly import SparsePolynomial, divided_difference
from .suites import THM1_FLAGS, SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Perm",
    "identity",
    "longest_element",
    "length",
    "descent_set",
    "inverse",
    "compose",
    "flatten",
    "lehmer_code",
    "perm_from_lehmer",
    "trim",
    "pad",
    "parse_permutation",
    "format_permutation",
    "FlagType",
    "complete_flag",
    "grassmannian_flag",
    "enumerate_flag_types",
    "is_minimal_rep",
    "check_minimal_rep",
    "check_class_tuple",
    "enumerate_minimal_reps",
    "parabolic_longest",
    "dual",
    "codim",
    "project_to_step",
    "projected_codim",
    "flatten_pair",
    "pair_grassmannian",
    "fiber_flag",
    "restrict_to_fiber",
    "fiber_reduction",
    "SparsePolynomial",
    "divided_difference",
    "schubert_polynomial",
    "expand_in_schubert_basis",
    "monk_expansion",
    "structure_constants_pair",
    "intersection_number",
    "Partition",
    "parse_partition",
    "format_partition",
    "partitions_in_rectangle",
    "partition_from_perm",
    "perm_from_partition",
    "lr_coefficient",
    "lr_expand",
    "product_to_point",
    "horn_inequality_holds",
    "check_condition_iii",
    "check_condition_iv",
    "MovabilityReport",
    "check_condition_i",
    "is_levi_movable",
    "exact_degree_tuples",
    "enumerate_levi_movable",
    "bk_structure_constant",
    "bk_product",
    "GrassmannianFactor",
    "FactorizationTree",
    "factor_once",
    "factor_full",
    "check_induced_movability",
    "pairwise_factor",
    "SuiteResult",
    "THM1_FLAGS",
    "run_suite",
    "run_all",
]
