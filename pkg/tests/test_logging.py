#!/usr/bin/env python3
# Tests for the standardized log lines emitted by slices and enumerations

from unittest.mock import MagicMock

from quivergeo import grassmannian
from quivergeo.catalog import bundled_spec
from quivergeo.graded import GradedRing
from quivergeo.grassmannian import spec_over
from quivergeo.quivers import module_M_kronecker
from quivergeo.utils.enumeration import check_budget
from quivergeo.utils.logging import (
    log_budget_check,
    log_enumeration_info,
    log_error_with_context,
    log_slice_info,
)


def test_enumeration_line_names_field_and_counts():
    logger = MagicMock()
    log_enumeration_info(logger, "grassmannian chain(1, 2)", 3, 7, 2, 1)
    logger.debug.assert_called_once_with(
        "grassmannian chain(1, 2) over F_3: kept 2 of 7 candidates, 1 degenerate"
    )


def test_enumeration_line_omits_zero_degenerate():
    logger = MagicMock()
    log_enumeration_info(logger, "P^2", 5, 31, 6, 0)
    logger.debug.assert_called_once_with("P^2 over F_5: kept 6 of 31 candidates")


def test_budget_line():
    logger = MagicMock()
    log_budget_check(logger, "P^2(F_5)", 31, None)
    log_budget_check(logger, "P^2(F_5)", 31, 100)
    assert [c.args[0] for c in logger.debug.call_args_list] == [
        "Budget check: P^2(F_5) needs ~31 candidates (cap unlimited)",
        "Budget check: P^2(F_5) needs ~31 candidates (cap 100)",
    ]


def test_slice_line():
    logger = MagicMock()
    log_slice_info(logger, 2, 6, 5)
    logger.debug.assert_called_once_with("Slice: m=2, ambient=6, quotient=5")


def test_error_line_carries_type_and_context():
    logger = MagicMock()
    log_error_with_context(logger, ValueError("bad q"), "enumerate points", command="points")
    logger.error.assert_called_once_with(
        "Error enumerate points (command=points): ValueError: bad q", exc_info=True
    )


def test_variety_points_logs_outcome(mocker):
    mock_log = mocker.patch("quivergeo.grassmannian.log_enumeration_info")
    grassmannian.variety_points(spec_over(bundled_spec("conic"), 5))
    mock_log.assert_called_once_with(grassmannian.logger, "P^2", 5, 31, 6)


def test_grassmannian_logs_degenerate_count(mocker):
    mock_log = mocker.patch("quivergeo.grassmannian.log_enumeration_info")
    rep = module_M_kronecker(spec_over(bundled_spec("point-pair"), 3))
    points = grassmannian.enumerate_grass(rep)

    args = mock_log.call_args.args
    assert args[1] == "grassmannian chain(1, 2)"
    assert args[2] == 3
    assert args[4] == len(points) == 2
    assert args[5] == sum(point.degenerate for point in points)


def test_check_budget_logs_before_refusing(mocker):
    mock_log = mocker.patch("quivergeo.utils.enumeration.log_budget_check")
    check_budget("P^2(F_5)", 31, 100)
    assert mock_log.call_args.args[1:] == ("P^2(F_5)", 31, 100)


def test_slice_construction_is_logged(mocker):
    mock_log = mocker.patch("quivergeo.graded.log_slice_info")
    GradedRing(bundled_spec("conic")).slice(5)
    assert mock_log.call_args.args[1:] == (5, 21, 11)
