"""
hilbert: the Hilbert function of S/I up to a degree.
"""

import time
from typing import Optional

from ..graded import hilbert_function
from ..utils.validation import validate_degree
from .base import BaseCommand, RunReport, handle_command_errors


class HilbertCommand(BaseCommand):
    name = "hilbert"

    @handle_command_errors("compute Hilbert function")
    def run(self, problem: str, upto: Optional[int] = None) -> RunReport:
        start_time = time.perf_counter()
        if upto is not None:
            validate_degree(upto, "upto")

        spec = self.load_spec(problem)
        upto = spec.d if upto is None else upto
        results = {"upto": upto, "hilbert": hilbert_function(spec, upto)}
        return self.build_report({"problem": problem, "upto": upto}, results, True, start_time)

    def render_text(self, report: RunReport) -> str:
        lines = self.header(report)
        if report.results:
            lines.append("m  dim")
            for m, dim in enumerate(report.results["hilbert"]):
                lines.append(f"{m:<2} {dim}")
        return "\n".join(lines)
