"""
equations: bilinear equations of the Kronecker grassmannian.
"""

import time

from ..grassmannian import emit_equations
from ..poly import parse_poly
from ..quivers import module_M_kronecker
from .base import BaseCommand, RunReport, handle_command_errors


class EquationsCommand(BaseCommand):
    name = "equations"

    @handle_command_errors("emit equations")
    def run(self, problem: str) -> RunReport:
        """
        Emit the 2x2-minor equations of the Kronecker model.

        The verdict fails if an equation does not parse back to itself.
        """
        start_time = time.perf_counter()
        spec = self.load_spec(problem)
        system = emit_equations(module_M_kronecker(spec))

        texts = system.to_text()
        reparse_ok = all(
            parse_poly(text, len(system.names) - 1, system.field, system.names) == f
            for text, (_, f) in zip(texts, system.equations)
        )

        results = {
            "field": str(system.field),
            "variables": list(system.names),
            "source_dim": system.source_dim,
            "target_dim": system.target_dim,
            "count": len(texts),
            "equations": system.to_json(),
            "reparse_ok": reparse_ok,
        }
        return self.build_report({"problem": problem}, results, reparse_ok, start_time)

    def render_text(self, report: RunReport) -> str:
        lines = self.header(report)
        results = report.results
        if results:
            lines.append(
                f"{results['count']} equations in u0..u{results['source_dim'] - 1}, "
                f"w0..w{results['target_dim'] - 1}"
            )
            lines.extend(f"  {eq['equation']}" for eq in results["equations"])
        return "\n".join(lines)
