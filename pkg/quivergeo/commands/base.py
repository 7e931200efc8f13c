"""
Base command class for the quivergeo CLI.

This module provides the run report structure, the error handling decorator
shared by all commands, and helpers for loading problems and resolving the
field a command works over.
"""

import inspect
import json
import time
from dataclasses import dataclass, field
from functools import wraps
from typing import Any, Dict, List, Optional

from ..config import Configuration
from ..constants import VERDICT_FAIL, VERDICT_PASS
from ..errors import EnumerationUnsupportedError, QuiverGeoError
from ..graded import ProblemSpec
from ..grassmannian import spec_over
from ..problem import ProblemFile, load_problem
from ..utils.logging import get_logger, log_error_with_context
from ..utils.validation import validate_budget, validate_prime

logger = get_logger(__name__)


@dataclass
class RunReport:
    """Outcome of one command: echo of inputs, results, timing and verdict."""

    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    timing: float = 0.0
    verdict: str = VERDICT_PASS
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict == VERDICT_PASS

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "timing": self.timing,
            "verdict": self.verdict,
        }
        if self.error is not None:
            data["error"] = self.error
        return data

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)


def handle_command_errors(operation_name: str):
    """
    Decorator to turn library errors into failed run reports.

    Validation errors (ValueError, TypeError) propagate so the CLI can treat
    them as usage errors.

    Args:
        operation_name: Description of the operation being performed
    """

    def decorator(func):
        signature = inspect.signature(func)

        @wraps(func)
        def wrapper(self, *args, **kwargs):
            start_time = time.perf_counter()
            try:
                return func(self, *args, **kwargs)
            except (ValueError, TypeError):
                raise
            except QuiverGeoError as e:
                log_error_with_context(logger, e, operation_name, command=self.name)
                arguments = signature.bind_partial(self, *args, **kwargs).arguments
                arguments.pop("self", None)
                return RunReport(
                    command=self.name,
                    inputs=self.describe_inputs(arguments),
                    timing=round(time.perf_counter() - start_time, 3),
                    verdict=VERDICT_FAIL,
                    error=f"Failed to {operation_name}: {e}",
                )

        return wrapper

    return decorator


class BaseCommand:
    """
    Base class for all commands.

    Subclasses set `name`, implement `run(**kwargs)` decorated with
    handle_command_errors, and may override `render_text`.
    """

    name = "command"

    def __init__(self, config: Configuration):
        self.config = config

    @property
    def budget(self) -> int:
        budget = self.config.get("enumeration.budget")
        validate_budget(budget)
        return budget

    def describe_inputs(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        """JSON-friendly echo of the arguments a command was called with."""
        inputs = {}
        for key, value in sorted(kwargs.items()):
            if value is None:
                continue
            if isinstance(value, (str, int, float, bool)):
                inputs[key] = value
            elif isinstance(value, (list, tuple)):
                inputs[key] = [v if isinstance(v, (int, float)) else str(v) for v in value]
            else:
                inputs[key] = str(value)
        return inputs

    def build_report(
        self,
        inputs: Dict[str, Any],
        results: Dict[str, Any],
        ok: bool,
        start_time: float,
    ) -> RunReport:
        return RunReport(
            command=self.name,
            inputs=self.describe_inputs(inputs),
            results=results,
            timing=round(time.perf_counter() - start_time, 3),
            verdict=VERDICT_PASS if ok else VERDICT_FAIL,
        )

    def load(self, problem: str) -> ProblemFile:
        return load_problem(problem)

    def load_spec(self, problem: str) -> ProblemSpec:
        return self.load(problem).to_spec()

    def resolve_q(self, spec: ProblemSpec, q: Optional[int]) -> int:
        """
        The prime to enumerate over: q, or the problem's own prime.

        Raises:
            ValueError: If q is not a prime
            EnumerationUnsupportedError: If neither q nor a prime field is given
        """
        if q is None:
            if spec.field.p is None:
                raise EnumerationUnsupportedError(
                    "problem is over Q; pass --q with a prime to enumerate"
                )
            return spec.field.p
        validate_prime(q)
        return q

    def spec_for(self, spec: ProblemSpec, q: Optional[int]) -> ProblemSpec:
        return spec_over(spec, self.resolve_q(spec, q))

    def render_text(self, report: RunReport) -> str:
        """Human-readable rendering; subclasses show their results."""
        lines = self.header(report)
        for key, value in sorted(report.results.items()):
            lines.append(f"  {key}: {value}")
        return "\n".join(lines)

    def header(self, report: RunReport) -> List[str]:
        lines = [f"{report.command}: {report.verdict} ({report.timing:.3f}s)"]
        if report.error:
            lines.append(f"error: {report.error}")
        return lines
