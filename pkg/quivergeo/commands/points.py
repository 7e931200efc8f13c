"""
points: F_q-points of X through one realization.
"""

import time
from typing import Any, List, Optional, Sequence

from ..constants import POINT_SOURCES
from ..grassmannian import enumerate_grass, variety_points
from ..moduli import ThinIsoClass, enumerate_thin_moduli, uniserial_chart
from ..quivers import build_model
from ..utils.validation import validate_choice, validate_degree_set
from .base import BaseCommand, RunReport, handle_command_errors


def _class_point(iso: ThinIsoClass) -> Any:
    point = iso.point()
    return point.to_json() if point is not None else iso.to_json()


class PointsCommand(BaseCommand):
    name = "points"

    @handle_command_errors("enumerate points")
    def run(
        self,
        problem: str,
        via: str = "direct",
        q: Optional[int] = None,
        degrees: Optional[Sequence[int]] = None,
    ) -> RunReport:
        """
        Count and list points.

        Args:
            problem: Problem file path or bundled:<name>
            via: direct, a grassmannian model, moduli or chart
            q: Prime to enumerate over (defaults to the problem's prime)
            degrees: Degree set for via=degrees

        Returns:
            RunReport with count and canonical point list
        """
        start_time = time.perf_counter()
        validate_choice(via, POINT_SOURCES, "via")
        if via == "degrees":
            if degrees is None:
                raise ValueError("degrees must be given for via=degrees")
            degrees = validate_degree_set(degrees)

        spec = self.load_spec(problem)
        q = self.resolve_q(spec, q)
        spec = self.spec_for(spec, q)
        check_collinearity = self.config.get("enumeration.check_collinearity", True)

        points: List[Any]
        if via == "direct":
            points = [p.to_json() for p in variety_points(spec, self.budget)]
        elif via == "moduli":
            classes = enumerate_thin_moduli(spec, q, self.budget, check_collinearity)
            points = [_class_point(iso) for iso in classes]
        elif via == "chart":
            points = [_class_point(iso) for iso in uniserial_chart(spec, q, self.budget)]
        else:
            _, rep = build_model(spec, via, degrees)
            points = [p.to_json() for p in enumerate_grass(rep, q, self.budget)]

        results = {"via": via, "q": q, "count": len(points), "points": points}
        inputs = {"problem": problem, "via": via, "q": q, "degrees": degrees}
        return self.build_report(inputs, results, True, start_time)

    def render_text(self, report: RunReport) -> str:
        lines = self.header(report)
        results = report.results
        if not results:
            return "\n".join(lines)
        lines.append(f"{results['count']} points via {results['via']} over F_{results['q']}")
        for point in results["points"]:
            if isinstance(point, dict):
                lines.append("  " + "  ".join(f"{v}:{tuple(g)}" for v, g in point.items()))
            else:
                lines.append("  [" + ":".join(point) + "]")
        return "\n".join(lines)
