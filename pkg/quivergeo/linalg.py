"""
Exact linear algebra over prime fields and the rationals.

Contains:
- FieldSpec: a prime field F_p or the rationals Q, with exact scalar arithmetic
- Matrix: dense immutable matrices with entries from one FieldSpec
- rref, kernel_basis, in_span: Gauss-Jordan based routines

Scalars are plain Python values: residues in [0, p) for F_p and
fractions.Fraction (always reduced, positive denominator) for Q. Both are
arbitrary precision, so arithmetic never overflows.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .constants import MAX_PRIME
from .errors import FieldError, FieldMismatchError, LinalgError
from .utils.validation import is_prime

Scalar = Union[int, Fraction]
Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class FieldSpec:
    """A prime field F_p (p set) or the rationals (p is None)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is None:
            return
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise FieldError("field characteristic must be an integer")
        if self.p >= MAX_PRIME:
            raise FieldError(f"prime {self.p} is not smaller than 2^31")
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not a prime")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def element(self, value: Union[int, Fraction, str]) -> Scalar:
        """Canonical representative of an integer, fraction or literal."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise FieldError(f"cannot interpret {value!r} as a field element")
        if self.p is None:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise FieldError(f"cannot interpret {value!r} as a rational")
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"denominator of {value} is zero in F_{self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise FieldError(f"cannot interpret {value!r} as an element of F_{self.p}")

    def contains(self, value: object) -> bool:
        """Whether value is already a canonical element of this field."""
        if isinstance(value, bool):
            return False
        if self.p is None:
            return isinstance(value, Fraction) or isinstance(value, int)
        return isinstance(value, int) and 0 <= value < self.p

    def check(self, value: object) -> Scalar:
        """Return value if it belongs to this field, else raise FieldMismatchError."""
        if not self.contains(value):
            raise FieldMismatchError(
                f"value {value!r} is not an element of {self}", str(self), repr(value)
            )
        if self.p is None:
            return Fraction(value)
        return value

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.p is None:
            return a + b
        return (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.p is None:
            return a - b
        return (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.p is None:
            return a * b
        return (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        if self.p is None:
            return -a
        return (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def power(self, a: Scalar, k: int) -> Scalar:
        if self.p is None:
            return Fraction(a) ** k
        return pow(a, k, self.p)

    def dot(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        total = sum(x * y for x, y in zip(u, v))
        if self.p is None:
            return Fraction(total)
        return total % self.p

    def format(self, a: Scalar) -> str:
        """Text form of a scalar: "3" or "2/7"."""
        if self.p is None:
            a = Fraction(a)
            if a.denominator == 1:
                return str(a.numerator)
            return f"{a.numerator}/{a.denominator}"
        return str(a)

    def parse(self, text: str) -> Scalar:
        """Inverse of format; also accepts any integer literal."""
        try:
            return self.element(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise FieldError(f"invalid scalar literal {text!r}: {e}") from e

    def to_json(self) -> Union[str, Dict[str, int]]:
        if self.p is None:
            return "Q"
        return {"prime": self.p}

    @classmethod
    def from_json(cls, data: Union[str, Dict[str, int]]) -> "FieldSpec":
        if data == "Q":
            return cls.rationals()
        if isinstance(data, dict) and "prime" in data:
            return cls.prime(data["prime"])
        raise FieldError(f"unrecognized field description: {data!r}")

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


def require_same_field(left: FieldSpec, right: FieldSpec) -> None:
    if left != right:
        raise FieldMismatchError(
            f"field mismatch: {left} vs {right}", str(left), str(right)
        )


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a FieldSpec; entries stored row-major as tuples."""

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise LinalgError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows:
            raise LinalgError(
                f"expected {self.rows} rows, got {len(self.entries)}"
            )
        for row in self.entries:
            if len(row) != self.cols:
                raise LinalgError(f"expected {self.cols} columns, got {len(row)}")
            for value in row:
                self.field.check(value)

    @classmethod
    def from_rows(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[Union[int, Fraction]]],
        cols: Optional[int] = None,
    ) -> "Matrix":
        """Build a matrix, reducing every entry into the field."""
        entries = tuple(tuple(field.element(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(field, len(entries), cols, entries)

    @classmethod
    def from_columns(
        cls, field: FieldSpec, columns: Sequence[Sequence[Scalar]], rows: int
    ) -> "Matrix":
        entries = tuple(
            tuple(field.element(col[i]) for col in columns) for i in range(rows)
        )
        return cls(field, rows, len(columns), entries)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, tuple((field.zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> "Matrix":
        return cls(
            field,
            size,
            size,
            tuple(
                tuple(field.one if i == j else field.zero for j in range(size))
                for i in range(size)
            ),
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            tuple(self.column(j) for j in range(self.cols)),
        )

    def matvec(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.cols:
            raise LinalgError(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(self.field.dot(row, v) for row in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        require_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise LinalgError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = [other.column(j) for j in range(other.cols)]
        return Matrix(
            self.field,
            self.rows,
            other.cols,
            tuple(
                tuple(self.field.dot(row, col) for col in other_cols)
                for row in self.entries
            ),
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        require_same_field(self.field, other.field)
        if self.shape != other.shape:
            raise LinalgError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            self.field,
            self.rows,
            self.cols,
            tuple(
                tuple(self.field.add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(
            self.field,
            self.rows,
            self.cols,
            tuple(tuple(self.field.mul(c, a) for a in row) for row in self.entries),
        )

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def to_lists(self) -> List[List[Scalar]]:
        return [list(row) for row in self.entries]

    def to_json(self) -> List[List[str]]:
        return [[self.field.format(a) for a in row] for row in self.entries]

    @classmethod
    def from_json(
        cls, field: FieldSpec, data: Sequence[Sequence[str]], rows: int, cols: int
    ) -> "Matrix":
        entries = tuple(tuple(field.parse(str(a)) for a in row) for row in data)
        return cls(field, rows, cols, entries)


class RrefResult(NamedTuple):
    echelon: Matrix
    rank: int
    pivots: Tuple[int, ...]


def rref(m: Matrix) -> RrefResult:
    """
    Reduced row echelon form by exact Gauss-Jordan elimination.

    The first nonzero entry in each column is used as pivot.

    Args:
        m: Input matrix

    Returns:
        RrefResult with the echelon matrix, its rank and pivot columns
    """
    field = m.field
    work = [list(row) for row in m.entries]
    pivots: List[int] = []
    pivot_row = 0

    for col in range(m.cols):
        if pivot_row >= m.rows:
            break
        found = next(
            (r for r in range(pivot_row, m.rows) if work[r][col] != 0), None
        )
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        inverse = field.inv(work[pivot_row][col])
        work[pivot_row] = [field.mul(inverse, a) for a in work[pivot_row]]
        for r in range(m.rows):
            if r != pivot_row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [
                    field.sub(a, field.mul(factor, b))
                    for a, b in zip(work[r], work[pivot_row])
                ]
        pivots.append(col)
        pivot_row += 1

    echelon = Matrix(m.field, m.rows, m.cols, tuple(tuple(row) for row in work))
    return RrefResult(echelon, len(pivots), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> List[Vector]:
    """
    Basis of the right null space {v : m v = 0}.

    Each basis vector has a 1 in its own free (non-pivot) column and zeros
    in the other free columns.
    """
    field = m.field
    echelon, _, pivots = rref(m)
    pivot_set = set(pivots)
    basis: List[Vector] = []

    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [field.zero] * m.cols
        vector[free] = field.one
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = field.neg(echelon.entries[row_index][free])
        basis.append(tuple(vector))

    return basis


def in_span(
    field: FieldSpec, v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]
) -> Optional[Vector]:
    """
    Coordinates c with sum(c_i * basis_i) = v, or None if v is not in the span.

    When the basis is linearly dependent, the coordinates of the dependent
    vectors are set to zero.

    Raises:
        LinalgError: If vector lengths differ
    """
    length = len(v)
    for b in basis:
        if len(b) != length:
            raise LinalgError(
                f"basis vector of length {len(b)} does not match length {length}"
            )
    for value in v:
        field.check(value)

    # Columns are the basis vectors, augmented by v
    augmented = Matrix(
        field,
        length,
        len(basis) + 1,
        tuple(
            tuple(field.check(b[i]) for b in basis) + (v[i],) for i in range(length)
        ),
    )
    echelon, _, pivots = rref(augmented)
    if len(basis) in pivots:
        return None

    coords = [field.zero] * len(basis)
    for row_index, pivot in enumerate(pivots):
        coords[pivot] = echelon.entries[row_index][len(basis)]
    return tuple(coords)


def canonical_vector(field: FieldSpec, v: Sequence[Scalar]) -> Optional[Vector]:
    """Scale v so its first nonzero entry is 1; None for the zero vector."""
    for value in v:
        if value != 0:
            inverse = field.inv(value)
            return tuple(field.mul(inverse, a) for a in v)
    return None
