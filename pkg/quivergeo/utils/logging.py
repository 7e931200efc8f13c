"""
Logging utilities for quivergeo.

Logging setup plus the standard debug lines emitted while slices are built
and finite-field enumerations run.
"""

import logging
import sys
from typing import Optional


def setup_logging(
    level: str = "INFO",
    format_string: Optional[str] = None,
    handler: Optional[logging.Handler] = None,
) -> None:
    """
    Configure logging for the application.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_string: Custom format string for log messages
        handler: Custom logging handler (defaults to stderr)
    """
    if format_string is None:
        format_string = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    if handler is None:
        handler = logging.StreamHandler(sys.stderr)

    logging.basicConfig(
        level=level.upper(),
        format=format_string,
        handlers=[handler],
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with the specified name.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)


def log_slice_info(
    logger: logging.Logger, degree: int, ambient_dim: int, quotient_dim: int
) -> None:
    """
    Log the dimensions of one graded slice in a standardized format.

    Args:
        logger: Logger instance to use
        degree: Degree m of the slice
        ambient_dim: Dimension of S^mV
        quotient_dim: Dimension of S^mV/I_m
    """
    logger.debug(f"Slice: m={degree}, ambient={ambient_dim}, quotient={quotient_dim}")


def log_budget_check(
    logger: logging.Logger, what: str, estimate: int, budget: Optional[int]
) -> None:
    """Log the candidate estimate of an enumeration against its budget."""
    cap = "unlimited" if budget is None else str(budget)
    logger.debug(f"Budget check: {what} needs ~{estimate} candidates (cap {cap})")


def log_enumeration_info(
    logger: logging.Logger,
    what: str,
    q: int,
    visited: int,
    kept: int,
    degenerate: Optional[int] = None,
) -> None:
    """
    Log the outcome of one enumeration over F_q.

    Args:
        logger: Logger instance to use
        what: The enumerated object, e.g. "grassmannian chain(1, 2)"
        q: Prime field order
        visited: Candidates visited (or the estimate when the search is pruned)
        kept: Points, classes or solutions that survived
        degenerate: Degenerate points among the kept ones (grassmannians only)
    """
    message = f"{what} over F_{q}: kept {kept} of {visited} candidates"
    if degenerate:
        message += f", {degenerate} degenerate"
    logger.debug(message)


def log_error_with_context(
    logger: logging.Logger,
    error: Exception,
    context: str,
    **kwargs,
) -> None:
    """
    Log an error with additional context information.

    Args:
        logger: Logger instance to use
        error: Exception that occurred
        context: Context description (e.g., "enumerating points")
        **kwargs: Additional context key-value pairs
    """
    context_parts = [f"{k}={v}" for k, v in kwargs.items()]
    context_str = f" ({', '.join(context_parts)})" if context_parts else ""

    logger.error(
        f"Error {context}{context_str}: {type(error).__name__}: {error}", exc_info=True
    )
