"""
quivergeo

Realizes projective schemes X in P^n, given by homogeneous polynomials, as
quiver grassmannians and as moduli of thin modules over bounded Beilinson
algebras, and verifies the realizations by exact linear algebra and
finite-field enumeration.
"""

from .config import Configuration, ConfigurationError, load_config
from .errors import (
    BudgetExceededError,
    EnumerationError,
    EnumerationUnsupportedError,
    FieldError,
    InconsistencyError,
    LinalgError,
    PolynomialError,
    ProblemFileError,
    ProblemSpecError,
    QuiverError,
    QuiverGeoError,
)
from .graded import ProblemSpec, hilbert_function, mult_map, quotient_slice
from .grassmannian import (
    compare,
    emit_equations,
    enumerate_grass,
    lemma_reduction_check,
    variety_points,
)
from .linalg import FieldSpec, Matrix, kernel_basis, rank, rref
from .moduli import (
    enumerate_thin_moduli,
    moduli_variety_bijection,
    normal_form,
    uniserial_chart,
)
from .poly import HomPoly, ProjPoint, format_poly, parse_poly
from .problem import load_problem, parse_problem
from .quivers import (
    beilinson_quiver,
    bounded_algebra,
    build_model,
    check_relations,
    module_M_full,
    module_M_kronecker,
    module_M_triple,
)

__version__ = "0.1.0"
__all__ = [
    "BudgetExceededError",
    "Configuration",
    "ConfigurationError",
    "EnumerationError",
    "EnumerationUnsupportedError",
    "FieldError",
    "FieldSpec",
    "HomPoly",
    "InconsistencyError",
    "LinalgError",
    "Matrix",
    "PolynomialError",
    "ProblemFileError",
    "ProblemSpec",
    "ProblemSpecError",
    "ProjPoint",
    "QuiverError",
    "QuiverGeoError",
    "beilinson_quiver",
    "bounded_algebra",
    "build_model",
    "check_relations",
    "compare",
    "emit_equations",
    "enumerate_grass",
    "enumerate_thin_moduli",
    "format_poly",
    "hilbert_function",
    "kernel_basis",
    "lemma_reduction_check",
    "load_config",
    "load_problem",
    "moduli_variety_bijection",
    "module_M_full",
    "module_M_kronecker",
    "module_M_triple",
    "mult_map",
    "normal_form",
    "parse_poly",
    "parse_problem",
    "quotient_slice",
    "rank",
    "rref",
    "uniserial_chart",
    "variety_points",
]
