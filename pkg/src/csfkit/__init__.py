"""csfkit: exact chromatic (quasi)symmetric functions of unit interval
graphs, computed two independent ways.

The coloring oracle enumerates proper colorings with an ascent
statistic; the word-product formula expands a product of reflection
operators on the affine weight lattice.  Both land on the same
symmetric function, and the verification suites check that along with
the modular law, the factorization law, the complete-graph value, the
Euler-characteristic product, Schur positivity, palindromicity and
e-positivity data.
"""

from .affine import (
    AffineWeight,
    BadWeight,
    FormulaResult,
    IndexOutOfRange,
    InvalidProfile,
    WeightSum,
    count_fixed_points,
    evaluate_formula,
    fixed_point_distribution,
    formula_term_count,
    fundamental_weight,
    reflect,
    s_set,
)
from .chromatic import (
    GradedMultiplicities,
    VerifyRecord,
    VerifyReport,
    chromatic_qsym,
    coloring_count,
    euler_char,
    formula_at_one,
    graded_multiplicities,
    oracle_at_one,
    verify_laws,
)
from .hessenberg import (
    Hessenberg,
    HessenbergError,
    LastValueNotN,
    ModularTriple,
    NotWeaklyIncreasing,
    RootIdeal,
    UnitIntervalGraph,
    ValueBelowIndex,
    connected_components,
    enumerate_hessenberg,
    find_modular_triples,
    h_profile,
    hess_to_ideal,
    ideal_to_hess,
    theta,
    unit_interval_graph,
    validate_hessenberg,
)
from .laurent import LaurentT, t_factorial
from .symfunc import (
    PositivityReport,
    SizeMismatch,
    SymFunc,
    convert,
    kostka,
    lr_coefficient,
    multiply,
    positivity_and_palindromy,
)

__version__ = "0.1.0"

__all__ = [
    "AffineWeight",
    "BadWeight",
    "FormulaResult",
    "GradedMultiplicities",
    "Hessenberg",
    "HessenbergError",
    "IndexOutOfRange",
    "InvalidProfile",
    "LastValueNotN",
    "LaurentT",
    "ModularTriple",
    "NotWeaklyIncreasing",
    "PositivityReport",
    "RootIdeal",
    "SizeMismatch",
    "SymFunc",
    "UnitIntervalGraph",
    "ValueBelowIndex",
    "VerifyRecord",
    "VerifyReport",
    "WeightSum",
    "chromatic_qsym",
    "coloring_count",
    "connected_components",
    "convert",
    "count_fixed_points",
    "enumerate_hessenberg",
    "euler_char",
    "evaluate_formula",
    "find_modular_triples",
    "fixed_point_distribution",
    "formula_at_one",
    "formula_term_count",
    "fundamental_weight",
    "graded_multiplicities",
    "h_profile",
    "hess_to_ideal",
    "ideal_to_hess",
    "kostka",
    "lr_coefficient",
    "multiply",
    "oracle_at_one",
    "positivity_and_palindromy",
    "reflect",
    "s_set",
    "t_factorial",
    "theta",
    "unit_interval_graph",
    "validate_hessenberg",
    "verify_laws",
]
