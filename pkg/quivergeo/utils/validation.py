"""
Input validation utilities for quivergeo.

This module provides reusable validation functions for common parameters.
"""

from typing import Iterable, List, Optional, Sequence

from ..constants import MAX_PRIME


def is_prime(value: int) -> bool:
    """Trial-division primality test."""
    if value < 2:
        return False
    if value % 2 == 0:
        return value == 2
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


def validate_prime(q: int, name: str = "q") -> None:
    """
    Validate a prime field order.

    Args:
        q: Candidate prime
        name: Parameter name used in messages

    Raises:
        TypeError: If q is not an integer
        ValueError: If q is not a prime below 2^31
    """
    if not isinstance(q, int) or isinstance(q, bool):
        raise TypeError(f"{name} must be an integer")
    if q >= MAX_PRIME:
        raise ValueError(f"{name} must be smaller than 2^31")
    if not is_prime(q):
        raise ValueError(f"{name} must be a prime")


def validate_dimension(n: int) -> None:
    """
    Validate the ambient dimension n of P^n.

    Raises:
        TypeError: If n is not an integer
        ValueError: If n is negative
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be an integer")
    if n < 0:
        raise ValueError("n must be non-negative")


def validate_quiver_params(n: int, d: int) -> None:
    """
    Validate the (n, d) parameters of a Beilinson-type quiver.

    Raises:
        TypeError: If n or d is not an integer
        ValueError: If n < 1 or d < 1
    """
    for name, value in (("n", n), ("d", d)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an integer")
        if value < 1:
            raise ValueError(f"{name} must be a positive integer")


def validate_degree(m: int, name: str = "m") -> None:
    """
    Validate a polynomial degree.

    Raises:
        TypeError: If m is not an integer
        ValueError: If m is negative
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"{name} must be an integer")
    if m < 0:
        raise ValueError(f"{name} must be non-negative")


def validate_budget(budget: Optional[int]) -> None:
    """
    Validate an enumeration budget.

    Raises:
        TypeError: If budget is not an integer
        ValueError: If budget is not positive
    """
    if budget is None:
        return
    if not isinstance(budget, int) or isinstance(budget, bool):
        raise TypeError("budget must be an integer")
    if budget <= 0:
        raise ValueError("budget must be positive")


def validate_choice(value: str, choices: Sequence[str], name: str) -> None:
    """
    Validate that value is one of choices.

    Raises:
        ValueError: If value is not allowed
    """
    if value not in choices:
        raise ValueError(f"{name} must be one of {list(choices)}")


def validate_degree_set(degrees: Iterable[int]) -> List[int]:
    """
    Validate a degree set for a chain model and return it as a list.

    Raises:
        TypeError: If an entry is not an integer
        ValueError: If the set has fewer than two entries or is not increasing
    """
    result = list(degrees)
    for value in result:
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("degrees must be integers")
    if len(result) < 2:
        raise ValueError("degrees must contain at least two entries")
    if result[0] < 0:
        raise ValueError("degrees must be non-negative")
    if any(b <= a for a, b in zip(result, result[1:])):
        raise ValueError("degrees must be strictly increasing")
    return result
