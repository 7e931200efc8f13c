"""
Degree-by-degree model of the homogeneous coordinate ring S/I of X.

For every degree m the slice S^mV/I_m is represented by its standard
monomials (the non-pivot columns of the row-reduced ideal slice I_m) and a
projection matrix that rewrites any degree-m polynomial in that basis.
Multiplication by a variable or a monomial then becomes an explicit matrix
between slices.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ProblemSpecError, ZeroPolynomialError
from .linalg import FieldSpec, Matrix, Scalar, rref
from .poly import (
    HomPoly,
    Monomial,
    ProjPoint,
    change_field,
    monomial_index,
    monomial_product,
    monomial_value,
    monomials,
)
from .utils.logging import get_logger, log_slice_info
from .utils.validation import validate_degree, validate_dimension

logger = get_logger(__name__)


@dataclass(frozen=True)
class ProblemSpec:
    """
    The input data X = V(f_1, ..., f_r) in P^n with degree bounds d and e.

    Use ProblemSpec.create, which fills in defaults and validates.
    """

    n: int
    field: FieldSpec
    polys: Tuple[HomPoly, ...]
    d: int
    e: Optional[int]

    @classmethod
    def create(
        cls,
        n: int,
        field: FieldSpec,
        polys: Sequence[HomPoly] = (),
        d: Optional[int] = None,
        e: Optional[int] = None,
    ) -> "ProblemSpec":
        """
        Validate inputs and fill in defaults.

        d defaults to the largest polynomial degree (at least 1); e defaults
        to d - 1 when d >= 2 and stays None otherwise.

        Raises:
            TypeError: If n is not an integer
            ProblemSpecError: If n, d, e or the polynomials are inconsistent
            ZeroPolynomialError: If a polynomial is zero
        """
        try:
            validate_dimension(n)
        except ValueError as e:
            raise ProblemSpecError(f"n must be at least 1, got {n}") from e
        if n < 1:
            raise ProblemSpecError(f"n must be at least 1, got {n}")

        for i, f in enumerate(polys):
            if f.n != n:
                raise ProblemSpecError(
                    f"polynomial {i + 1} uses {f.n + 1} variables, expected {n + 1}"
                )
            if f.field != field:
                raise ProblemSpecError(
                    f"polynomial {i + 1} is over {f.field}, expected {field}"
                )
            if f.is_zero():
                raise ZeroPolynomialError(f"polynomial {i + 1} is zero")
            if f.degree < 1:
                raise ProblemSpecError(
                    f"polynomial {i + 1} is constant; degree must be at least 1"
                )

        max_degree = max((f.degree for f in polys), default=1)
        if d is None:
            d = max(max_degree, 1)
        elif d < 1 or d < max_degree:
            raise ProblemSpecError(
                f"d={d} must be at least 1 and at least the maximal degree {max_degree}"
            )

        if e is None:
            e = d - 1 if d >= 2 else None
        elif not 0 < e < d:
            raise ProblemSpecError(f"e={e} must satisfy 0 < e < d={d}")

        return cls(n, field, tuple(polys), d, e)

    @property
    def r(self) -> int:
        return len(self.polys)

    def with_field(self, field: FieldSpec) -> "ProblemSpec":
        """Base change of every polynomial to another field."""
        if field == self.field:
            return self
        polys = tuple(change_field(f, field) for f in self.polys)
        return ProblemSpec.create(self.n, field, polys, self.d, self.e)

    def with_degrees(self, d: Optional[int] = None, e: Optional[int] = None) -> "ProblemSpec":
        return ProblemSpec.create(self.n, self.field, self.polys, d, e)


@dataclass(frozen=True)
class GradedSlice:
    """S^mV/I_m with its standard-monomial basis and projection."""

    m: int
    ambient_basis: Tuple[Monomial, ...]
    standard_monomials: Tuple[Monomial, ...]
    projection: Matrix
    ideal_rank: int

    @property
    def dim(self) -> int:
        return len(self.standard_monomials)

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient_basis)

    def project(self, coefficients: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        """Quotient coordinates of a degree-m polynomial given by its ambient coefficients."""
        return self.projection.matvec(coefficients)


@dataclass(frozen=True)
class MultMap:
    """Multiplication by X_j from slice m to slice m+1."""

    var_index: int
    from_degree: int
    matrix: Matrix


def monomial_basis(n: int, m: int) -> List[Monomial]:
    """Degree-m monomials in graded-lex order; length C(n+m, n)."""
    validate_dimension(n)
    validate_degree(m)
    return list(monomials(n, m))


def ideal_slice(spec: ProblemSpec, m: int) -> Matrix:
    """
    Generator matrix of I_m: one row per product mu * f_i with deg mu = m - deg f_i.

    Columns follow monomial_basis(n, m). No rows when every f_i has degree > m.
    """
    field = spec.field
    basis = monomials(spec.n, m)
    index = monomial_index(spec.n, m)
    rows: List[List[Scalar]] = []

    for f in spec.polys:
        if f.degree > m:
            continue
        for mu in monomials(spec.n, m - f.degree):
            row = [field.zero] * len(basis)
            for mono, coeff in f.terms:
                row[index[monomial_product(mono, mu)]] = coeff
            rows.append(row)

    return Matrix(field, len(rows), len(basis), tuple(tuple(row) for row in rows))


def _build_slice(spec: ProblemSpec, m: int) -> GradedSlice:
    field = spec.field
    basis = monomials(spec.n, m)
    echelon, rank, pivots = rref(ideal_slice(spec, m))
    pivot_rows = {col: row for row, col in enumerate(pivots)}
    free = [col for col in range(len(basis)) if col not in pivot_rows]

    # A pivot monomial is congruent to minus the free part of its echelon row
    projection = []
    for col_free in free:
        row = []
        for col in range(len(basis)):
            if col in pivot_rows:
                row.append(field.neg(echelon.entries[pivot_rows[col]][col_free]))
            else:
                row.append(field.one if col == col_free else field.zero)
        projection.append(tuple(row))

    graded = GradedSlice(
        m=m,
        ambient_basis=basis,
        standard_monomials=tuple(basis[col] for col in free),
        projection=Matrix(field, len(free), len(basis), tuple(projection)),
        ideal_rank=rank,
    )
    log_slice_info(logger, m, len(basis), graded.dim)
    return graded


class GradedRing:
    """
    Cache of quotient slices and multiplication maps for one ProblemSpec.

    Slices 0..d are built eagerly; higher degrees on demand.
    """

    def __init__(self, spec: ProblemSpec):
        self.spec = spec
        self._slices: Dict[int, GradedSlice] = {}
        self._mult: Dict[Tuple[int, Monomial], Matrix] = {}
        for m in range(spec.d + 1):
            self.slice(m)

    def slice(self, m: int) -> GradedSlice:
        if m < 0:
            raise ProblemSpecError(f"degree must be non-negative, got {m}")
        if m not in self._slices:
            self._slices[m] = _build_slice(self.spec, m)
        return self._slices[m]

    def multiplication(self, m: int, mono: Monomial) -> Matrix:
        """Matrix of multiplication by a monomial from slice m to slice m + deg(mono)."""
        key = (m, tuple(mono))
        cached = self._mult.get(key)
        if cached is not None:
            return cached

        source = self.slice(m)
        target = self.slice(m + sum(mono))
        index = monomial_index(self.spec.n, target.m)
        columns = [
            target.projection.column(index[monomial_product(mu, mono)])
            for mu in source.standard_monomials
        ]
        matrix = Matrix.from_columns(self.spec.field, columns, target.dim)
        self._mult[key] = matrix
        return matrix


@lru_cache(maxsize=64)
def graded_ring(spec: ProblemSpec) -> GradedRing:
    return GradedRing(spec)


def quotient_slice(spec: ProblemSpec, m: int) -> GradedSlice:
    """
    S^mV/I_m: standard monomials are the non-pivot columns of rref(I_m).

    The projection sends each standard monomial to its unit vector and each
    pivot monomial to its normal form in terms of standard monomials.
    """
    return graded_ring(spec).slice(m)


def variable_monomial(n: int, j: int) -> Monomial:
    return tuple(1 if i == j else 0 for i in range(n + 1))


def mult_map(spec: ProblemSpec, m: int, j: int) -> MultMap:
    """Multiplication by X_j from S^mV/I_m to S^{m+1}V/I_{m+1}."""
    matrix = graded_ring(spec).multiplication(m, variable_monomial(spec.n, j))
    return MultMap(var_index=j, from_degree=m, matrix=matrix)


def multiplication_by(spec: ProblemSpec, m: int, mono: Monomial) -> Matrix:
    return graded_ring(spec).multiplication(m, mono)


def hilbert_function(spec: ProblemSpec, upto: int) -> List[int]:
    """dim S^mV/I_m for m = 0..upto."""
    ring = graded_ring(spec)
    return [ring.slice(m).dim for m in range(upto + 1)]


def ambient_dimension(n: int, m: int) -> int:
    return comb(n + m, n)


def evaluation_vector(spec: ProblemSpec, a: ProjPoint, m: int) -> Tuple[Scalar, ...]:
    """
    Evaluation functional g -> g(a) on S^mV/I_m in dual standard-monomial coordinates.

    Coordinate k is the k-th standard monomial evaluated at a, i.e. the
    Veronese vector of a read at the standard monomials. Meaningful for a in X.
    """
    return tuple(
        monomial_value(spec.field, mono, a.coords)
        for mono in quotient_slice(spec, m).standard_monomials
    )
