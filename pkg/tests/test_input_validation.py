#!/usr/bin/env python3
# Tests for input validation helpers and command argument checks

import pytest

from quivergeo.commands import BuildCommand, HilbertCommand, PointsCommand, VerifyCommand
from quivergeo.graded import ProblemSpec, monomial_basis
from quivergeo.grassmannian import variety_points
from quivergeo.linalg import FieldSpec
from quivergeo.utils.enumeration import check_budget
from quivergeo.utils.validation import (
    is_prime,
    validate_budget,
    validate_choice,
    validate_degree,
    validate_degree_set,
    validate_dimension,
    validate_prime,
    validate_quiver_params,
)


class TestValidators:
    @pytest.mark.parametrize("value, expected", [(2, True), (3, True), (4, False), (1, False), (97, True), (91, False)])
    def test_is_prime(self, value, expected):
        assert is_prime(value) is expected

    @pytest.mark.parametrize(
        "q, expected_exception, error_match",
        [
            ("5", TypeError, "q must be an integer"),
            (True, TypeError, "q must be an integer"),
            (5.0, TypeError, "q must be an integer"),
            (4, ValueError, "q must be a prime"),
            (1, ValueError, "q must be a prime"),
            (2**31 + 11, ValueError, "smaller than 2\\^31"),
        ],
    )
    def test_validate_prime(self, q, expected_exception, error_match):
        with pytest.raises(expected_exception, match=error_match):
            validate_prime(q)

    def test_validate_prime_accepts(self):
        validate_prime(2)
        validate_prime(7919)

    @pytest.mark.parametrize(
        "n, d, expected_exception, error_match",
        [
            ("2", 1, TypeError, "n must be an integer"),
            (0, 1, ValueError, "n must be a positive integer"),
            (1, 0, ValueError, "d must be a positive integer"),
            (1, 1.5, TypeError, "d must be an integer"),
        ],
    )
    def test_validate_quiver_params(self, n, d, expected_exception, error_match):
        with pytest.raises(expected_exception, match=error_match):
            validate_quiver_params(n, d)

    @pytest.mark.parametrize(
        "func, value, expected_exception, error_match",
        [
            (validate_dimension, -1, ValueError, "n must be non-negative"),
            (validate_dimension, "x", TypeError, "n must be an integer"),
            (validate_degree, -2, ValueError, "m must be non-negative"),
            (validate_degree, None, TypeError, "m must be an integer"),
            (validate_budget, 0, ValueError, "budget must be positive"),
            (validate_budget, "100", TypeError, "budget must be an integer"),
        ],
    )
    def test_scalar_validators(self, func, value, expected_exception, error_match):
        with pytest.raises(expected_exception, match=error_match):
            func(value)

    def test_budget_none_allowed(self):
        validate_budget(None)

    def test_validate_choice(self):
        validate_choice("json", ["text", "json"], "format")
        with pytest.raises(ValueError, match="format must be one of"):
            validate_choice("xml", ["text", "json"], "format")

    @pytest.mark.parametrize(
        "degrees, expected_exception, error_match",
        [
            ([2], ValueError, "at least two entries"),
            ([2, 1], ValueError, "strictly increasing"),
            ([1, 1], ValueError, "strictly increasing"),
            ([-1, 2], ValueError, "non-negative"),
            ([0, "2"], TypeError, "degrees must be integers"),
        ],
    )
    def test_validate_degree_set(self, degrees, expected_exception, error_match):
        with pytest.raises(expected_exception, match=error_match):
            validate_degree_set(degrees)

    def test_degree_set_returns_list(self):
        assert validate_degree_set((0, 2, 3)) == [0, 2, 3]


class TestCommandArguments:
    """Argument errors propagate as ValueError/TypeError instead of failed reports."""

    def test_build_unknown_model(self, test_configuration):
        with pytest.raises(ValueError, match="model must be one of"):
            BuildCommand(test_configuration).run(problem="bundled:conic", model="segre")

    def test_build_bad_degrees(self, test_configuration):
        with pytest.raises(ValueError, match="strictly increasing"):
            BuildCommand(test_configuration).run(
                problem="bundled:conic", model="degrees", degrees=[2, 0]
            )

    def test_points_unknown_source(self, test_configuration):
        with pytest.raises(ValueError, match="via must be one of"):
            PointsCommand(test_configuration).run(problem="bundled:conic", via="magic", q=3)

    def test_points_degrees_required(self, test_configuration):
        with pytest.raises(ValueError, match="degrees must be given"):
            PointsCommand(test_configuration).run(problem="bundled:conic", via="degrees", q=3)

    def test_points_composite_q(self, test_configuration):
        with pytest.raises(ValueError, match="q must be a prime"):
            PointsCommand(test_configuration).run(problem="bundled:conic", q=6)

    def test_verify_needs_input(self, test_configuration):
        with pytest.raises(ValueError, match="needs a problem or a representation"):
            VerifyCommand(test_configuration).run()

    def test_verify_bad_prime(self, test_configuration):
        with pytest.raises(ValueError, match="q must be a prime"):
            VerifyCommand(test_configuration).run(problem="bundled:conic", qs=[3, 9])

    def test_hilbert_negative_degree(self, test_configuration):
        with pytest.raises(ValueError, match="upto must be non-negative"):
            HilbertCommand(test_configuration).run(problem="bundled:conic", upto=-1)


class TestValidatorsAtEntryPoints:
    """The scalar validators guard the library functions that accept these values."""

    def test_check_budget_rejects_zero(self):
        with pytest.raises(ValueError, match="budget must be positive"):
            check_budget("P^2(F_3)", 13, 0)

    def test_check_budget_rejects_string(self):
        with pytest.raises(TypeError, match="budget must be an integer"):
            check_budget("P^2(F_3)", 13, "100")

    def test_check_budget_within_limit(self):
        check_budget("P^2(F_3)", 13, 13)
        check_budget("P^2(F_3)", 13, None)

    def test_enumeration_rejects_negative_budget(self, conic):
        with pytest.raises(ValueError, match="budget must be positive"):
            variety_points(conic.with_field(FieldSpec(3)), budget=-5)

    def test_problem_spec_rejects_string_dimension(self, rationals):
        with pytest.raises(TypeError, match="n must be an integer"):
            ProblemSpec.create("2", rationals)

    @pytest.mark.parametrize(
        "n, m, expected_exception, error_match",
        [
            (-1, 2, ValueError, "n must be non-negative"),
            (2, -1, ValueError, "m must be non-negative"),
            (2.0, 1, TypeError, "n must be an integer"),
        ],
    )
    def test_monomial_basis_arguments(self, n, m, expected_exception, error_match):
        with pytest.raises(expected_exception, match=error_match):
            monomial_basis(n, m)

    def test_monomial_basis_of_p0(self):
        assert monomial_basis(0, 3) == [(3,)]
