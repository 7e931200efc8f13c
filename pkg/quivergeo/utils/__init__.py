"""
Utility modules for quivergeo.

This package contains common utilities used across the library:
- enumeration: Projective point generators and the budget guard
- validation: Input validation helpers
- logging: Centralized logging configuration
"""

from .enumeration import (
    affine_points,
    check_budget,
    count_projective_points,
    projective_points,
)
from .logging import get_logger, setup_logging
from .validation import (
    is_prime,
    validate_budget,
    validate_degree,
    validate_dimension,
    validate_prime,
    validate_quiver_params,
)

__all__ = [
    "affine_points",
    "check_budget",
    "count_projective_points",
    "projective_points",
    "get_logger",
    "setup_logging",
    "is_prime",
    "validate_budget",
    "validate_degree",
    "validate_dimension",
    "validate_prime",
    "validate_quiver_params",
]
