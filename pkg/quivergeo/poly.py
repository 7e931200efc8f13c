"""
Homogeneous polynomials over an exact field.

Contains:
- monomials: the degree-m monomial basis in graded-lex order (X0 > X1 > ... > Xn)
- HomPoly / ProjPoint: immutable polynomial and canonical projective point types
- parse_poly / format_poly: the text grammar

      expr   := ['-'] term (('+'|'-') term)*
      term   := factor ('*' factor)*
      factor := INT ['/' INT] | VAR ['^' INT] | '(' expr ')' ['^' INT]
      VAR    := 'X' INT

- evaluate, multiply, veronese and field/variable changes
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    NonHomogeneousError,
    PolynomialError,
    PolynomialSyntaxError,
    VariableIndexError,
    ZeroPolynomialError,
)
from .linalg import FieldSpec, Scalar, canonical_vector, require_same_field

Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(n: int, m: int) -> Tuple[Monomial, ...]:
    """
    All degree-m monomials in X0..Xn, ordered graded-lex with X0 > ... > Xn.

    Within one degree this is descending lexicographic order of exponent
    tuples, so X0^m comes first and Xn^m last.
    """
    if m < 0 or n < 0:
        return ()
    if n == 0:
        return ((m,),)
    result: List[Monomial] = []
    for first in range(m, -1, -1):
        for rest in monomials(n - 1, m - first):
            result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def monomial_index(n: int, m: int) -> Dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(monomials(n, m))}


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def format_monomial(mono: Monomial, names: Optional[Sequence[str]] = None) -> str:
    """Text form of a monomial, e.g. "X0*X1^2"; "1" for the empty monomial."""
    names = names or [f"X{i}" for i in range(len(mono))]
    factors = []
    for name, exponent in zip(names, mono):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class HomPoly:
    """
    Homogeneous polynomial in X0..Xn.

    terms holds (monomial, coefficient) pairs without zero coefficients,
    sorted in graded-lex order, so equal polynomials compare equal.
    """

    n: int
    field: FieldSpec
    degree: int
    terms: Tuple[Tuple[Monomial, Scalar], ...]

    @classmethod
    def from_terms(
        cls,
        n: int,
        field: FieldSpec,
        terms: Mapping[Monomial, Union[int, Scalar]],
        degree: Optional[int] = None,
    ) -> "HomPoly":
        """
        Build the canonical polynomial from a monomial -> coefficient map.

        Raises:
            NonHomogeneousError: If the nonzero terms have different degrees
            ZeroPolynomialError: If all coefficients vanish and degree is None
        """
        cleaned: Dict[Monomial, Scalar] = {}
        for mono, coeff in terms.items():
            if len(mono) != n + 1:
                raise PolynomialError(
                    f"monomial {mono} has {len(mono)} exponents, expected {n + 1}"
                )
            value = field.element(coeff)
            if value != 0:
                cleaned[mono] = value

        degrees = sorted({sum(mono) for mono in cleaned})
        if len(degrees) > 1:
            raise NonHomogeneousError(degrees)
        if degrees:
            if degree is not None and degree != degrees[0]:
                raise NonHomogeneousError([degree, degrees[0]])
            degree = degrees[0]
        elif degree is None:
            raise ZeroPolynomialError("polynomial is zero")

        order = monomial_index(n, degree)
        ordered = tuple(
            sorted(cleaned.items(), key=lambda item: order[item[0]])
        )
        return cls(n, field, degree, ordered)

    @classmethod
    def monomial(cls, n: int, field: FieldSpec, mono: Monomial) -> "HomPoly":
        return cls.from_terms(n, field, {tuple(mono): 1})

    @property
    def coefficients(self) -> Dict[Monomial, Scalar]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_vector(self) -> Tuple[Scalar, ...]:
        """Coefficients over monomials(n, degree)."""
        coeffs = self.coefficients
        return tuple(
            coeffs.get(mono, self.field.zero) for mono in monomials(self.n, self.degree)
        )

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^n stored in canonical form (first nonzero coordinate 1)."""

    field: FieldSpec
    coords: Tuple[Scalar, ...]

    @classmethod
    def from_coords(
        cls, field: FieldSpec, coords: Sequence[Union[int, Scalar]]
    ) -> "ProjPoint":
        """
        Canonicalize a coordinate vector.

        Raises:
            PolynomialError: If every coordinate is zero
        """
        values = [field.element(c) for c in coords]
        canonical = canonical_vector(field, values)
        if canonical is None:
            raise PolynomialError("projective point cannot have all coordinates zero")
        return cls(field, canonical)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def to_json(self) -> List[str]:
        return [self.field.format(c) for c in self.coords]

    def __str__(self) -> str:
        return "[" + ":".join(self.field.format(c) for c in self.coords) + "]"


# Parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_]*\d*)|(?P<op>[-+*^/()]))"
)


class _Token:
    __slots__ = ("kind", "text", "position")

    def __init__(self, kind: str, text: str, position: int):
        self.kind = kind
        self.text = text
        self.position = position


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = match.lastgroup or "op"
        start = match.start(kind)
        tokens.append(_Token(kind, match.group(kind), start))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


_Terms = Dict[Monomial, Scalar]


class _Parser:
    """Recursive-descent parser producing monomial -> coefficient maps."""

    def __init__(
        self,
        text: str,
        n: int,
        field: FieldSpec,
        variables: Optional[Sequence[str]],
    ):
        self.text = text
        self.n = n
        self.field = field
        self.variables = {name: i for i, name in enumerate(variables)} if variables else None
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.current.position, self.text)

    def expect_op(self, op: str) -> None:
        if self.current.kind != "op" or self.current.text != op:
            found = self.current.text or "end of input"
            raise self.error(f"expected {op!r}, found {found!r}")
        self.advance()

    def parse(self) -> _Terms:
        if self.current.kind == "end":
            raise self.error("empty polynomial")
        result = self.expr()
        if self.current.kind != "end":
            raise self.error(f"unexpected token {self.current.text!r}")
        return result

    def expr(self) -> _Terms:
        negate = False
        if self.current.kind == "op" and self.current.text == "-":
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = _scale(self.field, result, self.field.neg(self.field.one))
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            right = self.term()
            if op == "-":
                right = _scale(self.field, right, self.field.neg(self.field.one))
            result = _add(self.field, result, right)
        return result

    def term(self) -> _Terms:
        result = self.factor()
        while self.current.kind == "op" and self.current.text == "*":
            self.advance()
            result = _mul(self.field, result, self.factor())
        return result

    def factor(self) -> _Terms:
        token = self.current
        zero = (0,) * (self.n + 1)

        if token.kind == "int":
            self.advance()
            value = self.field.element(int(token.text))
            if self.current.kind == "op" and self.current.text == "/":
                self.advance()
                if self.current.kind != "int":
                    raise self.error("expected integer denominator")
                denominator = int(self.advance().text)
                if denominator == 0 or self.field.element(denominator) == 0:
                    raise PolynomialSyntaxError(
                        "denominator vanishes in the field", token.position, self.text
                    )
                value = self.field.div(value, self.field.element(denominator))
            return {zero: value}

        if token.kind == "name":
            self.advance()
            index = self.variable_index(token)
            mono = [0] * (self.n + 1)
            mono[index] = self.exponent()
            return {tuple(mono): self.field.one}

        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return _power(self.field, inner, self.exponent(), self.n)

        found = token.text or "end of input"
        raise self.error(f"unexpected token {found!r}")

    def exponent(self) -> int:
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            if self.current.kind != "int":
                raise self.error("expected integer exponent")
            return int(self.advance().text)
        return 1

    def variable_index(self, token: _Token) -> int:
        if self.variables is not None:
            if token.text not in self.variables:
                raise PolynomialSyntaxError(
                    f"unknown variable {token.text!r}", token.position, self.text
                )
            return self.variables[token.text]
        match = re.fullmatch(r"X(\d+)", token.text)
        if match is None:
            raise PolynomialSyntaxError(
                f"unknown variable {token.text!r}", token.position, self.text
            )
        index = int(match.group(1))
        if index > self.n:
            raise VariableIndexError(index, self.n, token.position)
        return index


def _add(field: FieldSpec, a: _Terms, b: _Terms) -> _Terms:
    result = dict(a)
    for mono, coeff in b.items():
        result[mono] = field.add(result.get(mono, field.zero), coeff)
    return result


def _scale(field: FieldSpec, a: _Terms, c: Scalar) -> _Terms:
    return {mono: field.mul(c, coeff) for mono, coeff in a.items()}


def _mul(field: FieldSpec, a: _Terms, b: _Terms) -> _Terms:
    result: _Terms = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = monomial_product(m1, m2)
            result[mono] = field.add(result.get(mono, field.zero), field.mul(c1, c2))
    return result


def _power(field: FieldSpec, a: _Terms, k: int, n: int) -> _Terms:
    result: _Terms = {(0,) * (n + 1): field.one}
    for _ in range(k):
        result = _mul(field, result, a)
    return result


def parse_poly(
    text: str,
    n: int,
    field: FieldSpec,
    variables: Optional[Sequence[str]] = None,
) -> HomPoly:
    """
    Parse a homogeneous polynomial in X0..Xn.

    Args:
        text: Polynomial text, e.g. "X0*X2 - X1^2"
        n: Largest variable index
        field: Coefficient field; integer literals are reduced into it
        variables: Optional custom variable names replacing X0..Xn

    Returns:
        The canonical HomPoly

    Raises:
        PolynomialSyntaxError: On malformed input (with character position)
        VariableIndexError: If a variable index exceeds n
        NonHomogeneousError: If monomials of different degrees occur
        ZeroPolynomialError: If the polynomial reduces to zero
    """
    if variables is not None and len(variables) != n + 1:
        raise PolynomialError(f"expected {n + 1} variable names, got {len(variables)}")
    terms = _Parser(text, n, field, variables).parse()
    return HomPoly.from_terms(n, field, terms)


def format_poly(f: HomPoly, names: Optional[Sequence[str]] = None) -> str:
    """
    Text form of f that parse_poly reads back to the same polynomial.

    Prime-field coefficients print as residues; rational coefficients print
    with their sign.
    """
    if not f.terms:
        return "0"
    parts: List[str] = []
    for mono, coeff in f.terms:
        negative = not f.field.is_prime_field and coeff < 0
        magnitude = -coeff if negative else coeff
        body = format_monomial(mono, names)
        if magnitude == 1:
            text = body
        elif body == "1":
            text = f.field.format(magnitude)
        else:
            text = f"{f.field.format(magnitude)}*{body}"
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)


# Arithmetic and evaluation


def _coords(a: Union[ProjPoint, Sequence[Scalar]]) -> Sequence[Scalar]:
    return a.coords if isinstance(a, ProjPoint) else a


def monomial_value(field: FieldSpec, mono: Monomial, coords: Sequence[Scalar]) -> Scalar:
    value = field.one
    for c, exponent in zip(coords, mono):
        if exponent:
            value = field.mul(value, field.power(c, exponent))
    return value


def evaluate(f: HomPoly, a: Union[ProjPoint, Sequence[Scalar]]) -> Scalar:
    """
    Value of f at a representative of a.

    Only whether the result is zero is independent of the representative.

    Raises:
        PolynomialError: If the point has the wrong number of coordinates
    """
    coords = _coords(a)
    if isinstance(a, ProjPoint):
        require_same_field(f.field, a.field)
    if len(coords) != f.n + 1:
        raise PolynomialError(
            f"point has {len(coords)} coordinates, polynomial has {f.n + 1} variables"
        )
    total = f.field.zero
    for mono, coeff in f.terms:
        total = f.field.add(
            total, f.field.mul(coeff, monomial_value(f.field, mono, coords))
        )
    return total


def vanishes_at(polys: Sequence[HomPoly], a: Union[ProjPoint, Sequence[Scalar]]) -> bool:
    return all(evaluate(f, a) == 0 for f in polys)


def multiply(f: HomPoly, g: HomPoly) -> HomPoly:
    """
    Product of two polynomials; degrees add.

    Raises:
        FieldMismatchError: If f and g live over different fields
    """
    require_same_field(f.field, g.field)
    if f.n != g.n:
        raise PolynomialError(f"cannot multiply polynomials in {f.n + 1} and {g.n + 1} variables")
    product = _mul(f.field, f.coefficients, g.coefficients)
    return HomPoly.from_terms(f.n, f.field, product, degree=f.degree + g.degree)


def veronese(a: ProjPoint, m: int) -> Tuple[Scalar, ...]:
    """
    Degree-m Veronese vector of a: all degree-m monomials evaluated at a.

    Entries follow monomials(n, m). Rescaling a by t rescales the vector by t^m.
    """
    if m < 0:
        raise PolynomialError("veronese degree must be non-negative")
    return tuple(
        monomial_value(a.field, mono, a.coords) for mono in monomials(a.n, m)
    )


def change_field(f: HomPoly, field: FieldSpec) -> HomPoly:
    """
    Reinterpret the coefficients of f in another field.

    Used for base change of rational problems to F_p; raises FieldError when a
    denominator vanishes mod p.
    """
    if f.field == field:
        return f
    terms = {mono: field.element(coeff) for mono, coeff in f.terms}
    return HomPoly.from_terms(f.n, field, terms, degree=f.degree)


def permute_variables(f: HomPoly, permutation: Sequence[int]) -> HomPoly:
    """Substitute X_i -> X_permutation[i]."""
    if sorted(permutation) != list(range(f.n + 1)):
        raise PolynomialError(f"{list(permutation)} is not a permutation of 0..{f.n}")
    terms: _Terms = {}
    for mono, coeff in f.terms:
        image = [0] * (f.n + 1)
        for i, exponent in enumerate(mono):
            image[permutation[i]] += exponent
        terms[tuple(image)] = coeff
    return HomPoly.from_terms(f.n, f.field, terms, degree=f.degree)
