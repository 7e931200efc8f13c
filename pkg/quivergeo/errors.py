"""
Exception hierarchy for quivergeo.

Every error raised by the library derives from QuiverGeoError so that the
command layer can turn it into a failed run report. Argument validation in
utils.validation raises plain TypeError/ValueError instead.
"""

from typing import Optional, Sequence


class QuiverGeoError(Exception):
    """Base exception for all quivergeo errors."""

    pass


class FieldError(QuiverGeoError):
    """Raised for an invalid field description or a value outside the field."""

    pass


class FieldMismatchError(FieldError):
    """Raised when values from two different fields are combined."""

    def __init__(self, message: str, left: str = "", right: str = ""):
        super().__init__(message)
        self.left = left
        self.right = right


class LinalgError(QuiverGeoError):
    """Raised for shape or length mismatches in linear algebra."""

    pass


class PolynomialError(QuiverGeoError):
    """Base exception for polynomial input and arithmetic errors."""

    pass


class PolynomialSyntaxError(PolynomialError):
    """Raised when polynomial text does not match the grammar."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class NonHomogeneousError(PolynomialError):
    """Raised when a polynomial mixes monomials of different degrees."""

    def __init__(self, degrees: Sequence[int]):
        low, high = sorted(degrees)[:2]
        super().__init__(
            f"polynomial is not homogeneous: found degrees {low} and {high}"
        )
        self.degrees = (low, high)


class ZeroPolynomialError(PolynomialError):
    """Raised when a defining polynomial reduces to zero."""

    pass


class VariableIndexError(PolynomialError):
    """Raised when a variable index exceeds the ambient dimension."""

    def __init__(self, index: int, n: int, position: Optional[int] = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"variable X{index} out of range for n={n}{where}")
        self.index = index
        self.n = n
        self.position = position


class ProblemSpecError(QuiverGeoError):
    """Raised when n, d, e and the polynomials are inconsistent."""

    pass


class QuiverError(QuiverGeoError):
    """Base exception for quiver presentations and representations."""

    pass


class InadmissibleStartError(QuiverError):
    """Raised when a lifted relation would run past the last vertex."""

    def __init__(self, start: int, degree: int, d: int):
        super().__init__(
            f"relation of degree {degree} cannot start at vertex {start} (d={d})"
        )
        self.start = start
        self.degree = degree
        self.d = d


class RelationError(QuiverError):
    """Raised when a relation references unknown or uncomposable arrows."""

    pass


class RepresentationError(QuiverError):
    """Raised when a representation does not fit its presentation."""

    pass


class EnumerationError(QuiverGeoError):
    """Base exception for finite-field enumeration."""

    pass


class EnumerationUnsupportedError(EnumerationError):
    """Raised when enumeration is requested over the rationals."""

    pass


class BudgetExceededError(EnumerationError):
    """Raised when an enumeration would exceed the candidate budget."""

    def __init__(self, what: str, estimate: int, budget: int):
        super().__init__(
            f"refusing to enumerate {what}: estimated {estimate} candidates "
            f"exceeds budget {budget}"
        )
        self.what = what
        self.estimate = estimate
        self.budget = budget


class PointNotOnVarietyError(EnumerationError):
    """Raised when a point passed to veronese_point does not lie on X."""

    pass


class InconsistencyError(EnumerationError):
    """Raised when a computed invariant fails (a counterexample, not user error)."""

    pass


class LemmaHypothesisError(EnumerationError):
    """Raised when the one-dimensional end vertex of the triple model is missing."""

    pass


class ProblemFileError(QuiverGeoError):
    """Raised for malformed problem files, with line and column."""

    def __init__(self, message: str, line: int, column: int = 1, source: str = ""):
        prefix = f"{source}:" if source else ""
        super().__init__(f"{prefix}{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source
