"""
Enumeration utilities for quivergeo.

This module provides the projective and affine point generators that every
finite-field enumeration is built on, together with the budget guard.
"""

from itertools import product
from typing import Iterator, Optional, Tuple

from ..errors import BudgetExceededError
from .logging import get_logger, log_budget_check
from .validation import validate_budget

logger = get_logger(__name__)


def count_projective_points(q: int, length: int) -> int:
    """Number of lines in F_q^length, i.e. |P^(length-1)(F_q)|."""
    if length <= 0:
        return 0
    return (q**length - 1) // (q - 1)


def projective_points(q: int, length: int) -> Iterator[Tuple[int, ...]]:
    """
    Generator over canonical representatives of the lines in F_q^length.

    Representatives have their first nonzero coordinate equal to 1. The
    order is deterministic: by position of the leading 1, then
    lexicographically in the remaining coordinates.

    Args:
        q: Prime field order
        length: Vector length (projective dimension + 1)

    Yields:
        Tuples of residues in [0, q)
    """
    for lead in range(length):
        prefix = (0,) * lead + (1,)
        for tail in product(range(q), repeat=length - lead - 1):
            yield prefix + tail


def affine_points(q: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Generator over all vectors of F_q^length in lexicographic order."""
    yield from product(range(q), repeat=length)


def check_budget(what: str, estimate: int, budget: Optional[int]) -> None:
    """
    Refuse an enumeration whose estimated candidate count exceeds the budget.

    Args:
        what: Description of the enumeration
        estimate: Estimated number of candidates
        budget: Candidate cap (None disables the check)

    Raises:
        TypeError: If budget is not an integer
        ValueError: If budget is not positive
        BudgetExceededError: If estimate > budget
    """
    validate_budget(budget)
    log_budget_check(logger, what, estimate, budget)
    if budget is not None and estimate > budget:
        raise BudgetExceededError(what, estimate, budget)
