"""
Problem files.

A problem file is line oriented:

    field: Fp 5          (or: field: Q)
    n: 2
    d: 2                 (optional)
    e: 1                 (optional)
    polys:
      X0*X2 - X1^2       (one polynomial per indented line)

Blank lines and lines starting with '#' are ignored. Every diagnostic carries
the line and column it refers to.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .errors import FieldError, PolynomialError, PolynomialSyntaxError, ProblemFileError
from .graded import ProblemSpec
from .linalg import FieldSpec
from .poly import parse_poly
from .utils.logging import get_logger

logger = get_logger(__name__)

BUNDLED_PREFIX = "bundled:"

_KEYS = ("field", "n", "d", "e", "polys")


@dataclass(frozen=True)
class PolyLine:
    line: int
    column: int
    text: str


@dataclass(frozen=True)
class ProblemFile:
    """Parsed but not yet validated contents of a problem file."""

    field: FieldSpec
    n: int
    d: Optional[int]
    e: Optional[int]
    polys: Tuple[PolyLine, ...]
    source: str = "<problem>"

    def to_spec(self, field: Optional[FieldSpec] = None) -> ProblemSpec:
        """
        Parse the polynomials and build the ProblemSpec.

        Args:
            field: Parse over this field instead of the file's own

        Raises:
            ProblemFileError: If a polynomial does not parse
            ProblemSpecError: If n, d, e and the polynomials are inconsistent
        """
        field = field or self.field
        parsed = []
        for entry in self.polys:
            try:
                parsed.append(parse_poly(entry.text, self.n, field))
            except PolynomialSyntaxError as e:
                raise ProblemFileError(
                    str(e).rsplit(" at position", 1)[0],
                    entry.line,
                    entry.column + e.position,
                    self.source,
                ) from e
            except PolynomialError as e:
                raise ProblemFileError(str(e), entry.line, entry.column, self.source) from e
        return ProblemSpec.create(self.n, field, parsed, self.d, self.e)

    def to_text(self) -> str:
        lines = [f"field: {'Q' if self.field.p is None else f'Fp {self.field.p}'}"]
        lines.append(f"n: {self.n}")
        if self.d is not None:
            lines.append(f"d: {self.d}")
        if self.e is not None:
            lines.append(f"e: {self.e}")
        lines.append("polys:")
        lines.extend(f"  {entry.text}" for entry in self.polys)
        return "\n".join(lines) + "\n"


def _parse_int(value: str, key: str, line: int, column: int, source: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ProblemFileError(f"{key} must be an integer, got {value!r}", line, column, source)


def _parse_field(value: str, line: int, column: int, source: str) -> FieldSpec:
    parts = value.split()
    if parts == ["Q"]:
        return FieldSpec.rationals()
    if len(parts) == 2 and parts[0] == "Fp":
        p = _parse_int(parts[1], "field prime", line, column, source)
        try:
            return FieldSpec.prime(p)
        except FieldError as e:
            raise ProblemFileError(str(e), line, column, source) from e
    raise ProblemFileError(f"field must be 'Fp <prime>' or 'Q', got {value!r}", line, column, source)


def parse_problem(text: str, source: str = "<problem>") -> ProblemFile:
    """
    Parse problem file text.

    Raises:
        ProblemFileError: On unknown keys, duplicate or missing entries, or bad values
    """
    values = {}
    polys: List[PolyLine] = []
    in_polys = False

    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(raw) - len(raw.lstrip())

        if in_polys and indent > 0:
            polys.append(PolyLine(number, indent + 1, stripped))
            continue
        in_polys = False

        if ":" not in stripped:
            raise ProblemFileError("expected 'key: value'", number, indent + 1, source)
        key, _, value = stripped.partition(":")
        key = key.strip()
        value_column = raw.index(":") + 2 + (len(value) - len(value.lstrip()))
        value = value.strip()

        if key not in _KEYS:
            raise ProblemFileError(f"unknown key {key!r}", number, indent + 1, source)
        if key in values:
            raise ProblemFileError(f"duplicate key {key!r}", number, indent + 1, source)

        if key == "polys":
            if value:
                raise ProblemFileError(
                    "polynomials go on the following indented lines", number, value_column, source
                )
            values[key] = None
            in_polys = True
        elif key == "field":
            values[key] = _parse_field(value, number, value_column, source)
        else:
            values[key] = _parse_int(value, key, number, value_column, source)

    for required in ("field", "n"):
        if required not in values:
            raise ProblemFileError(f"missing required key {required!r}", 1, 1, source)

    logger.debug(f"Parsed problem {source}: n={values['n']}, {len(polys)} polynomials")
    return ProblemFile(
        field=values["field"],
        n=values["n"],
        d=values.get("d"),
        e=values.get("e"),
        polys=tuple(polys),
        source=source,
    )


def load_problem(location: Union[str, Path]) -> ProblemFile:
    """
    Load a problem from a file path or from "bundled:<name>".

    Raises:
        ProblemFileError: If the file cannot be read or parsed
    """
    text_location = str(location)
    if text_location.startswith(BUNDLED_PREFIX):
        from .catalog import bundled_problem

        return bundled_problem(text_location[len(BUNDLED_PREFIX):])

    path = Path(location)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ProblemFileError(f"cannot read problem file: {e.strerror}", 1, 1, str(path)) from e
    return parse_problem(text, source=str(path))
