"""Exact enumeration toolkit for closure-under-permutation analysis.

Finite search spaces only, everything exact: histogram classes of
functions, counts of subsets closed under permutation, equal-performance
verification of black-box search algorithms, and landscape constraint
classes with explicit non-closure witnesses.
"""

from .combinatorics import (
    FractionRow,
    LogFraction,
    binomial,
    count_all_subsets,
    count_cup_subsets,
    count_histograms,
    cup_fraction,
    fraction_table,
    log10_int,
    log10_ratio,
    multinomial,
)
from .core import (
    DEFAULT_ORBIT_DOMAIN_CAP,
    DEFAULT_SPACE_CAP,
    CapacityError,
    FiniteFunction,
    FunctionSet,
    Histogram,
    Permutation,
    SignatureMismatchError,
    SpaceSignature,
    compose,
    compose_permutations,
    enumerate_functions,
    enumerate_histograms,
    find_permutation,
    histogram_of,
    iter_value_rearrangements,
    orbit,
    representative_function,
)
from .cup import BasisClass, BasisDecomposition, closure, decompose, is_cup
from .fileformat import (
    FunctionSetDocument,
    ParseError,
    load_document,
    parse_document,
    render_document,
    write_document,
)
from .figures import render_fraction_plot
from .harness import (
    DecisionTree,
    GreedyNeighbor,
    Lexicographic,
    NflReport,
    PerformanceMeasure,
    ProtocolViolationError,
    ReverseLexicographic,
    SearchAlgorithm,
    SeededRandom,
    Trace,
    builtin_measures,
    count_algorithms,
    enumerate_algorithms,
    initial_state,
    minimum_value,
    performance,
    performance_table,
    run,
    seeded_random_next,
    sequence_multiset,
    sum_of_values,
    value_at_step,
    verify_nfl,
)
from .landscape import (
    MINIMA,
    STEEPNESS,
    ConstraintClass,
    HypercubeNeighborhood,
    Neighborhood,
    ValueMetric,
    WitnessUnavailableError,
    build_constraint_class,
    count_local_minima,
    find_noninvariant_permutation,
    hypercube_neighborhood,
    is_nontrivial,
    max_minima_over_histogram,
    max_steepness,
    product_neighborhood,
    range_diameter,
    witness_not_cup,
)

__version__ = "0.1.0"

__all__ = [
    "BasisClass",
    "BasisDecomposition",
    "CapacityError",
    "ConstraintClass",
    "DEFAULT_ORBIT_DOMAIN_CAP",
    "DEFAULT_SPACE_CAP",
    "DecisionTree",
    "FiniteFunction",
    "FractionRow",
    "FunctionSet",
    "FunctionSetDocument",
    "GreedyNeighbor",
    "Histogram",
    "HypercubeNeighborhood",
    "Lexicographic",
    "LogFraction",
    "MINIMA",
    "Neighborhood",
    "NflReport",
    "ParseError",
    "PerformanceMeasure",
    "Permutation",
    "ProtocolViolationError",
    "ReverseLexicographic",
    "STEEPNESS",
    "SearchAlgorithm",
    "SeededRandom",
    "SignatureMismatchError",
    "SpaceSignature",
    "Trace",
    "ValueMetric",
    "WitnessUnavailableError",
    "binomial",
    "build_constraint_class",
    "builtin_measures",
    "closure",
    "compose",
    "compose_permutations",
    "count_algorithms",
    "count_all_subsets",
    "count_cup_subsets",
    "count_histograms",
    "count_local_minima",
    "cup_fraction",
    "decompose",
    "enumerate_algorithms",
    "enumerate_functions",
    "enumerate_histograms",
    "find_noninvariant_permutation",
    "find_permutation",
    "fraction_table",
    "histogram_of",
    "hypercube_neighborhood",
    "initial_state",
    "is_cup",
    "is_nontrivial",
    "iter_value_rearrangements",
    "load_document",
    "log10_int",
    "log10_ratio",
    "max_minima_over_histogram",
    "max_steepness",
    "minimum_value",
    "multinomial",
    "orbit",
    "parse_document",
    "performance",
    "performance_table",
    "product_neighborhood",
    "range_diameter",
    "render_document",
    "render_fraction_plot",
    "representative_function",
    "run",
    "seeded_random_next",
    "sequence_multiset",
    "sum_of_values",
    "value_at_step",
    "verify_nfl",
    "witness_not_cup",
    "write_document",
]
