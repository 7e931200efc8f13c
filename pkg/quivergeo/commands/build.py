"""
build: construct a quiver presentation and the module M for one model.
"""

import json
import time
from pathlib import Path
from typing import Optional, Sequence

from ..constants import BUILD_MODELS
from ..errors import ProblemFileError
from ..quivers import build_model, check_relations, representation_to_json
from ..utils.validation import validate_choice, validate_degree_set
from .base import BaseCommand, RunReport, handle_command_errors


class BuildCommand(BaseCommand):
    name = "build"

    @handle_command_errors("build model")
    def run(
        self,
        problem: str,
        model: str = "kronecker",
        out: Optional[str] = None,
        degrees: Optional[Sequence[int]] = None,
    ) -> RunReport:
        """
        Build the presentation and representation of one model.

        Args:
            problem: Problem file path or bundled:<name>
            model: One of BUILD_MODELS
            out: Where to write the representation JSON (includes the presentation)
            degrees: Degree set for the degrees model

        Returns:
            RunReport with dimension vector, arrow and relation counts; fails
            if the representation violates a relation of its presentation
        """
        start_time = time.perf_counter()
        validate_choice(model, BUILD_MODELS, "model")
        if degrees is not None:
            degrees = validate_degree_set(degrees)

        spec = self.load_spec(problem)
        presentation, representation = build_model(spec, model, degrees)
        violated = check_relations(presentation, representation)

        results = {
            "model": model,
            "field": str(spec.field),
            "quiver": presentation.name,
            "vertices": list(presentation.vertices),
            "dims": representation.dimension_vector(),
            "degrees": [representation.degrees.get(v) for v in presentation.vertices],
            "arrows": len(presentation.arrows),
            "relations": len(presentation.relations),
            "violated": violated,
        }

        if out is not None:
            path = Path(out)
            try:
                path.write_text(
                    json.dumps(representation_to_json(representation), sort_keys=True, indent=2)
                    + "\n",
                    encoding="utf-8",
                )
            except OSError as e:
                raise ProblemFileError(f"cannot write {path}: {e.strerror}", 1, 1, str(path)) from e
            results["written"] = str(path)

        inputs = {"problem": problem, "model": model, "out": out, "degrees": degrees}
        return self.build_report(inputs, results, not violated, start_time)

    def render_text(self, report: RunReport) -> str:
        lines = self.header(report)
        results = report.results
        if not results:
            return "\n".join(lines)
        lines.append(f"model: {results['model']} over {results['field']} ({results['quiver']})")
        lines.append(f"dims: {results['dims']}")
        lines.append(f"arrows: {results['arrows']}")
        lines.append(f"relations: {results['relations']}")
        if results["violated"]:
            lines.append(f"violated relations: {', '.join(results['violated'])}")
        if "written" in results:
            lines.append(f"written: {results['written']}")
        return "\n".join(lines)
