#!/usr/bin/env python3
# Tests for command error handling in quivergeo

import json

import pytest

from quivergeo.commands import (
    BuildCommand,
    EquationsCommand,
    HilbertCommand,
    PointsCommand,
    RunReport,
    VerifyCommand,
)
from quivergeo.config import Configuration
from quivergeo.constants import VERDICT_FAIL
from quivergeo.errors import BudgetExceededError, ProblemFileError


@pytest.fixture
def tiny_budget_configuration():
    config = Configuration()
    config.update_from_cli_args({"budget": 5})
    return config


@pytest.mark.parametrize(
    "command_class, kwargs, expected_error_prefix",
    [
        (
            PointsCommand,
            {"problem": "bundled:conic"},
            "Failed to enumerate points: problem is over Q",
        ),
        (
            BuildCommand,
            {"problem": "bundled:segre"},
            "Failed to build model: bundled:segre:1:1: unknown bundled example",
        ),
        (
            BuildCommand,
            {"problem": "bundled:P2", "model": "triple"},
            "Failed to build model: the triple model needs d >= 2",
        ),
        (
            HilbertCommand,
            {"problem": "no/such/problem.txt"},
            "Failed to compute Hilbert function: no/such/problem.txt:1:1: cannot read problem file",
        ),
        (
            VerifyCommand,
            {"representation": "no/such/rep.json"},
            "Failed to verify realizations: no/such/rep.json:1:1: cannot read representation",
        ),
        (
            PointsCommand,
            {"problem": "bundled:conic", "via": "moduli", "q": 5, "degrees": None},
            "Failed to enumerate points: refusing to enumerate thin moduli",
        ),
    ],
)
def test_library_errors_become_failed_reports(
    tiny_budget_configuration, command_class, kwargs, expected_error_prefix
):
    """Library errors are reported, not raised."""
    report = command_class(tiny_budget_configuration).run(**kwargs)

    assert isinstance(report, RunReport)
    assert report.verdict == VERDICT_FAIL
    assert not report.passed
    assert report.error.startswith(expected_error_prefix)
    assert report.results == {}
    assert report.inputs["problem" if "problem" in kwargs else "representation"]


def test_syntax_error_in_problem_file(test_configuration, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("field: Q\nn: 2\npolys:\n  X0*X2 - X1^\n", encoding="utf-8")
    report = EquationsCommand(test_configuration).run(problem=str(path))
    assert report.verdict == VERDICT_FAIL
    assert f"{path}:4:" in report.error
    assert "expected integer exponent" in report.error


def test_error_is_logged_with_context(mocker, test_configuration):
    mock_log = mocker.patch("quivergeo.commands.base.log_error_with_context")
    HilbertCommand(test_configuration).run(problem="bundled:segre")

    mock_log.assert_called_once()
    args, kwargs = mock_log.call_args
    assert isinstance(args[1], ProblemFileError)
    assert args[2] == "compute Hilbert function"
    assert kwargs == {"command": "hilbert"}


def test_unexpected_errors_propagate(mocker, test_configuration):
    mocker.patch(
        "quivergeo.commands.hilbert.hilbert_function", side_effect=RuntimeError("boom")
    )
    with pytest.raises(RuntimeError, match="boom"):
        HilbertCommand(test_configuration).run(problem="bundled:conic")


def test_budget_error_from_library(mocker, test_configuration):
    mocker.patch(
        "quivergeo.commands.points.variety_points",
        side_effect=BudgetExceededError("P^2(F_5)", 31, 10),
    )
    report = PointsCommand(test_configuration).run(problem="bundled:conic", q=5)
    assert report.error == (
        "Failed to enumerate points: refusing to enumerate P^2(F_5): "
        "estimated 31 candidates exceeds budget 10"
    )


def test_failed_report_json(test_configuration):
    report = HilbertCommand(test_configuration).run(problem="bundled:segre")
    data = json.loads(report.to_json())
    assert data["verdict"] == "fail"
    assert data["command"] == "hilbert"
    assert data["error"].startswith("Failed to compute Hilbert function")
    assert data["inputs"] == {"problem": "bundled:segre"}


def test_failed_report_text(test_configuration):
    command = HilbertCommand(test_configuration)
    text = command.render_text(command.run(problem="bundled:segre"))
    assert text.splitlines()[0].startswith("hilbert: fail")
    assert "error: Failed to compute Hilbert function" in text


def test_positional_arguments_in_failed_report(test_configuration):
    report = HilbertCommand(test_configuration).run("bundled:segre", 3)
    assert report.verdict == VERDICT_FAIL
    assert report.inputs == {"problem": "bundled:segre", "upto": 3}


def test_positional_arguments_mixed_with_keywords(test_configuration):
    report = PointsCommand(test_configuration).run("bundled:segre", q=5)
    assert report.verdict == VERDICT_FAIL
    assert report.inputs == {"problem": "bundled:segre", "q": 5}


def test_positional_arguments_pass_through(test_configuration):
    report = HilbertCommand(test_configuration).run("bundled:conic", 4)
    assert report.passed
    assert report.results["hilbert"] == [1, 3, 5, 7, 9]


def test_validation_error_reraised_unchanged(mocker, test_configuration):
    error = ValueError("upto too large")
    mocker.patch("quivergeo.commands.hilbert.hilbert_function", side_effect=error)
    with pytest.raises(ValueError) as excinfo:
        HilbertCommand(test_configuration).run("bundled:conic")
    assert excinfo.value is error
    assert excinfo.value.__traceback__.tb_next is not None


def test_invalid_configured_budget_is_rejected():
    config = Configuration()
    config._config["enumeration"]["budget"] = 0
    with pytest.raises(ValueError, match="budget must be positive"):
        PointsCommand(config).run(problem="bundled:conic", q=5)
