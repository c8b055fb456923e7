"""Exact crossed-product Lie algebra toolkit.

Constructs crossed products of finite-dimensional Lie algebras acting on
the polynomial ring Q[t], computes Schouten brackets on polynomial
multivectors, and verifies dynamical Yang-Baxter structures and the
bialgebra differentials they induce.  All arithmetic is exact.
"""

from .exactalg import Poly, Rational, RatFunc, linsolve
from .liealg import (
    LieAlgebra,
    cartan_3form,
    direct_sum,
    is_semisimple,
    killing,
    killing_sharp,
    make_abelian,
    make_sl2,
    radical,
)
from .multivec import Multivector, POLY_RING, RATFUNC_RING, lambda_sharp, wedge
from .action import (
    Action,
    ActionTag,
    ActionType,
    CrossedProduct,
    check_type_criteria,
    classify,
    crossed_bracket,
    extended_realization,
    gamma_section,
    standard_action,
    validate_action,
    witt_bracket,
)
from .schouten import (
    D_operator,
    GradedOperator,
    apply_graded,
    dtheta_sharp,
    schouten,
    square_check,
)
from .bialgebra import (
    CompatiblePair,
    DybeProblem,
    SplitCrossedProduct,
    coboundary_solve,
    cocycle_check,
    compatible_pair_check,
    decompose_dstar,
    detect_split,
    dual_structures,
    dybe_residual,
    family_residual_coefficient,
    is_dynamical_rmatrix,
    rmatrix_condition_sl2,
    standard_rmatrix,
    standard_split,
    trivial_bialgebra_check,
    trivial_dstar_check,
)

__version__ = "0.1.0"

__all__ = [
    "Action", "ActionTag", "ActionType", "CompatiblePair", "CrossedProduct",
    "D_operator", "DybeProblem", "GradedOperator", "LieAlgebra",
    "Multivector", "POLY_RING", "Poly", "RATFUNC_RING", "RatFunc",
    "Rational", "SplitCrossedProduct", "apply_graded", "cartan_3form",
    "check_type_criteria", "classify", "coboundary_solve", "cocycle_check",
    "compatible_pair_check", "crossed_bracket", "decompose_dstar",
    "detect_split", "direct_sum", "dtheta_sharp", "dual_structures",
    "dybe_residual", "extended_realization", "family_residual_coefficient",
    "gamma_section", "is_dynamical_rmatrix", "is_semisimple", "killing",
    "killing_sharp", "lambda_sharp", "linsolve", "make_abelian", "make_sl2",
    "radical", "rmatrix_condition_sl2", "schouten", "square_check",
    "standard_action", "standard_rmatrix", "standard_split",
    "trivial_bialgebra_check", "trivial_dstar_check", "validate_action",
    "wedge", "witt_bracket",
]
