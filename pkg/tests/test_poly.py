#!/usr/bin/env python3
# Tests for homogeneous polynomials, the text grammar and projective points

import random
from fractions import Fraction

import pytest

from quivergeo.errors import (
    FieldError,
    FieldMismatchError,
    NonHomogeneousError,
    PolynomialError,
    PolynomialSyntaxError,
    VariableIndexError,
    ZeroPolynomialError,
)
from quivergeo.linalg import FieldSpec
from quivergeo.poly import (
    HomPoly,
    ProjPoint,
    change_field,
    evaluate,
    format_monomial,
    format_poly,
    monomial_index,
    monomial_product,
    monomials,
    multiply,
    parse_poly,
    permute_variables,
    vanishes_at,
    veronese,
)


class TestMonomials:
    def test_order_is_graded_lex(self):
        assert monomials(1, 2) == ((2, 0), (1, 1), (0, 2))
        assert monomials(2, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert monomials(0, 3) == ((3,),)

    @pytest.mark.parametrize("n, m, count", [(1, 3, 4), (2, 2, 6), (2, 3, 10), (3, 2, 10)])
    def test_counts(self, n, m, count):
        assert len(monomials(n, m)) == count

    def test_degree_zero(self):
        assert monomials(2, 0) == ((0, 0, 0),)

    def test_format_monomial(self):
        assert format_monomial((1, 2)) == "X0*X1^2"
        assert format_monomial((0, 0)) == "1"
        assert format_monomial((0, 1), ["u", "w"]) == "w"


class TestParsing:
    def test_conic_over_rationals(self, rationals):
        f = parse_poly("X0*X2 - X1^2", 2, rationals)
        assert f.degree == 2
        assert f.coefficients == {(1, 0, 1): 1, (0, 2, 0): -1}
        assert f.coefficient_vector() == (0, 0, 1, -1, 0, 0)

    def test_fractions_and_parentheses(self, rationals):
        f = parse_poly("1/2*(X0 + X1)^2", 1, rationals)
        assert f.coefficients == {
            (2, 0): Fraction(1, 2),
            (1, 1): Fraction(1),
            (0, 2): Fraction(1, 2),
        }

    def test_frobenius_square_over_f2(self, f2):
        f = parse_poly("(X0 + X1)^2", 1, f2)
        assert f.coefficients == {(2, 0): 1, (0, 2): 1}

    def test_leading_minus(self, f5):
        f = parse_poly("-X0 + 3*X1", 1, f5)
        assert f.coefficients == {(1, 0): 4, (0, 1): 3}

    def test_custom_variable_names(self, rationals):
        f = parse_poly("u0*w1 - u1*w0", 3, rationals, ["u0", "u1", "w0", "w1"])
        assert f.coefficients == {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}

    @pytest.mark.parametrize(
        "text, error_match",
        [
            ("", "empty polynomial at position 0"),
            ("X0 *", "unexpected token 'end of input' at position 4"),
            ("X0 $ X1", "unexpected character '\\$' at position 3"),
            ("(X0 + X1", "expected '\\)'"),
            ("Y0*X1", "unknown variable 'Y0' at position 0"),
            ("X0^", "expected integer exponent"),
            ("2 X0", "unexpected token 'X0' at position 2"),
        ],
    )
    def test_syntax_errors(self, rationals, text, error_match):
        with pytest.raises(PolynomialSyntaxError, match=error_match):
            parse_poly(text, 1, rationals)

    def test_syntax_error_carries_position(self, rationals):
        with pytest.raises(PolynomialSyntaxError) as excinfo:
            parse_poly("X0 + + X1", 1, rationals)
        assert excinfo.value.position == 5

    def test_variable_out_of_range(self, rationals):
        with pytest.raises(VariableIndexError, match="variable X3 out of range for n=2"):
            parse_poly("X0*X3", 2, rationals)

    def test_not_homogeneous(self, rationals):
        with pytest.raises(NonHomogeneousError, match="found degrees 1 and 2") as excinfo:
            parse_poly("X0 + X1^2", 1, rationals)
        assert excinfo.value.degrees == (1, 2)

    def test_zero_polynomial(self, f5):
        with pytest.raises(ZeroPolynomialError):
            parse_poly("X0 - X0", 1, f5)
        with pytest.raises(ZeroPolynomialError):
            parse_poly("5*X0", 1, f5)

    def test_denominator_vanishing_in_field(self, f5):
        with pytest.raises(PolynomialSyntaxError, match="denominator vanishes"):
            parse_poly("1/5*X0", 1, f5)

    def test_wrong_number_of_names(self, rationals):
        with pytest.raises(PolynomialError, match="expected 2 variable names"):
            parse_poly("u", 1, rationals, ["u"])


class TestFormatting:
    def test_signs_over_rationals(self, rationals):
        f = parse_poly("X1^2 - X0*X2", 2, rationals)
        assert format_poly(f) == "-X0*X2 + X1^2"
        assert format_poly(parse_poly("1/2*X0", 1, rationals)) == "1/2*X0"

    def test_residues_over_prime_field(self, f5):
        assert format_poly(parse_poly("X0*X2 - X1^2", 2, f5)) == "X0*X2 + 4*X1^2"

    def test_zero_prints_as_zero(self, f5):
        assert format_poly(HomPoly.from_terms(1, f5, {}, degree=2)) == "0"

    @pytest.mark.parametrize(
        "text, n, p",
        [
            ("X0*X2 - X1^2", 2, None),
            ("3/4*X0^3 - 2*X1*X2^2 + X2^3", 2, None),
            ("X0^3 + X1^3 + X2^3", 2, 7),
        ],
    )
    def test_format_reparses(self, text, n, p):
        field = FieldSpec(p)
        f = parse_poly(text, n, field)
        assert parse_poly(format_poly(f), n, field) == f


class TestProjPoint:
    def test_canonical_form(self, f5):
        a = ProjPoint.from_coords(f5, [2, 4, 3])
        assert a.coords == (1, 2, 4)
        assert str(a) == "[1:2:4]"
        assert a.to_json() == ["1", "2", "4"]
        assert a.n == 2

    def test_scaled_points_are_equal(self, f5):
        assert ProjPoint.from_coords(f5, [0, 3, 1]) == ProjPoint.from_coords(f5, [0, 1, 2])

    def test_zero_point_rejected(self, f5):
        with pytest.raises(PolynomialError, match="all coordinates zero"):
            ProjPoint.from_coords(f5, [0, 0])


class TestEvaluation:
    def test_conic_points(self, f5):
        f = parse_poly("X0*X2 - X1^2", 2, f5)
        assert evaluate(f, ProjPoint.from_coords(f5, [1, 2, 4])) == 0
        assert evaluate(f, ProjPoint.from_coords(f5, [1, 1, 2])) == 1
        assert vanishes_at([f], ProjPoint.from_coords(f5, [0, 0, 1]))

    def test_wrong_length(self, f5):
        f = parse_poly("X0*X1", 1, f5)
        with pytest.raises(PolynomialError, match="point has 3 coordinates"):
            evaluate(f, (1, 0, 0))

    def test_field_mismatch(self, f3, f5):
        f = parse_poly("X0*X1", 1, f5)
        with pytest.raises(FieldMismatchError):
            evaluate(f, ProjPoint.from_coords(f3, [1, 1]))

    def test_veronese(self, f5):
        a = ProjPoint.from_coords(f5, [1, 2])
        assert veronese(a, 2) == (1, 2, 4)
        assert veronese(a, 0) == (1,)

    def test_multiply(self, rationals):
        f = parse_poly("X0 - X1", 1, rationals)
        g = parse_poly("X0 + X1", 1, rationals)
        assert multiply(f, g) == parse_poly("X0^2 - X1^2", 1, rationals)


class TestFieldAndVariableChanges:
    def test_change_field(self, rationals, f5):
        f = parse_poly("X0*X2 - X1^2", 2, rationals)
        assert change_field(f, f5) == parse_poly("X0*X2 + 4*X1^2", 2, f5)

    def test_change_field_vanishing_denominator(self, rationals, f5):
        f = parse_poly("1/5*X0 + X1", 1, rationals)
        with pytest.raises(FieldError, match="denominator"):
            change_field(f, f5)

    def test_permute_variables(self, rationals):
        f = parse_poly("X0*X2 - X1^2", 2, rationals)
        assert permute_variables(f, [2, 1, 0]) == f
        assert permute_variables(f, [1, 0, 2]) == parse_poly("X1*X2 - X0^2", 2, rationals)

    def test_permutation_validated(self, rationals):
        f = parse_poly("X0*X1", 1, rationals)
        with pytest.raises(PolynomialError, match="is not a permutation"):
            permute_variables(f, [0, 0])


def random_scalar(rng, field, nonzero=False):
    if field.is_prime_field:
        return rng.randrange(1 if nonzero else 0, field.p)
    numerator = rng.choice([-3, -2, -1, 1, 2, 3]) if nonzero else rng.randint(-3, 3)
    return Fraction(numerator, rng.randint(1, 3))


def random_form(rng, field, n, degree):
    support = [mono for mono in monomials(n, degree) if rng.random() < 0.5]
    terms = {mono: random_scalar(rng, field, nonzero=True) for mono in support}
    return HomPoly.from_terms(n, field, terms, degree=degree)


class TestRandomProperties:
    @pytest.mark.parametrize("p", [3, 7, None])
    def test_evaluation_is_multiplicative(self, p):
        field = FieldSpec(p)
        rng = random.Random(2000 + (p or 0))
        for _ in range(300):
            n = rng.randint(1, 3)
            f = random_form(rng, field, n, rng.randint(0, 3))
            g = random_form(rng, field, n, rng.randint(0, 3))
            a = [random_scalar(rng, field) for _ in range(n + 1)]
            assert evaluate(multiply(f, g), a) == field.mul(evaluate(f, a), evaluate(g, a))

    @pytest.mark.parametrize("p", [2, 5, None])
    def test_veronese_factorizes(self, p):
        field = FieldSpec(p)
        rng = random.Random(3000 + (p or 0))
        for _ in range(100):
            n = rng.randint(1, 3)
            coords = [random_scalar(rng, field) for _ in range(n)] + [field.one]
            rng.shuffle(coords)
            a = ProjPoint.from_coords(field, coords)
            m1, m2 = rng.randint(0, 3), rng.randint(0, 3)
            product = veronese(a, m1 + m2)
            index = monomial_index(n, m1 + m2)
            for mu, x in zip(monomials(n, m1), veronese(a, m1)):
                for nu, y in zip(monomials(n, m2), veronese(a, m2)):
                    assert product[index[monomial_product(mu, nu)]] == field.mul(x, y)

    @pytest.mark.parametrize("p", [5, None])
    def test_permutation_commutes_with_evaluation(self, p):
        field = FieldSpec(p)
        rng = random.Random(4000 + (p or 0))
        for _ in range(200):
            n = rng.randint(1, 3)
            f = random_form(rng, field, n, rng.randint(1, 3))
            permutation = list(range(n + 1))
            rng.shuffle(permutation)
            a = [random_scalar(rng, field) for _ in range(n + 1)]
            # f(X_perm[0], ..., X_perm[n]) at a is f at the reordered coordinates
            pulled_back = [a[permutation[i]] for i in range(n + 1)]
            assert evaluate(permute_variables(f, permutation), a) == evaluate(f, pulled_back)
