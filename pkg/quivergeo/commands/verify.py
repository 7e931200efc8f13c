"""
verify: run every realization check for a problem over one or more primes.

Per prime the checks are: grassmannian comparison for each configured model,
the unique-extension check of the triple model, the moduli bijection, the
uniserial chart against {a in X : a_0 != 0}, relation lifts at every start,
equation soundness and completeness, and agreement of all counts.
"""

import json
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..errors import BudgetExceededError, ProblemFileError, QuiverError
from ..graded import ProblemSpec
from ..grassmannian import (
    compare,
    emit_equations,
    enumerate_grass,
    equations_vanish,
    lemma_reduction_check,
    sample_off_grassmannian,
    solve_equations_brute_force,
    variety_points,
)
from ..moduli import moduli_variety_bijection, uniserial_chart
from ..quivers import (
    bounded_algebra,
    check_relations,
    module_M_full,
    module_M_kronecker,
    representation_from_json,
)
from ..utils.logging import get_logger
from ..utils.validation import validate_prime
from .base import BaseCommand, RunReport, handle_command_errors

logger = get_logger(__name__)


class VerifyCommand(BaseCommand):
    name = "verify"

    @handle_command_errors("verify realizations")
    def run(
        self,
        problem: Optional[str] = None,
        qs: Optional[Sequence[int]] = None,
        representation: Optional[str] = None,
    ) -> RunReport:
        """
        Run the verification pipeline.

        Args:
            problem: Problem file path or bundled:<name>
            qs: Primes to verify over (defaults to the problem's prime)
            representation: Optional representation JSON file whose relations
                are checked against its own presentation

        Returns:
            RunReport whose verdict passes iff every check passed
        """
        start_time = time.perf_counter()
        if problem is None and representation is None:
            raise ValueError("verify needs a problem or a representation")
        for q in qs or []:
            validate_prime(q)

        results: Dict[str, Any] = {}
        ok = True

        if representation is not None:
            violated = self._check_representation_file(representation)
            results["representation"] = {"file": representation, "violated": violated}
            ok = ok and not violated

        if problem is not None:
            spec = self.load_spec(problem)
            primes = list(qs) if qs else [self.resolve_q(spec, None)]
            results["relations"] = self._check_lifts(spec)
            ok = ok and results["relations"]["ok"]
            per_prime = {}
            for q in primes:
                per_prime[str(q)] = self._verify_prime(spec, q)
                ok = ok and per_prime[str(q)]["ok"]
            results["primes"] = per_prime

        inputs = {"problem": problem, "qs": list(qs or []), "representation": representation}
        return self.build_report(inputs, results, ok, start_time)

    def _check_representation_file(self, location: str) -> List[str]:
        path = Path(location)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise ProblemFileError(f"cannot read representation: {e.strerror}", 1, 1, str(path)) from e
        except json.JSONDecodeError as e:
            raise ProblemFileError(f"invalid JSON: {e.msg}", e.lineno, e.colno, str(path)) from e
        if not isinstance(data, dict):
            raise QuiverError(f"{path} does not describe a representation")
        rep = representation_from_json(data)
        violated = check_relations(rep.presentation, rep)
        if violated:
            logger.warning(f"Representation {path} violates: {', '.join(violated)}")
        return violated

    def _check_lifts(self, spec: ProblemSpec) -> Dict[str, Any]:
        """M on the full chain against the lifts of every f_i at every admissible start."""
        pres = bounded_algebra(spec, "all")
        violated = check_relations(pres, module_M_full(spec, pres))
        return {"count": len(pres.relations), "violated": violated, "ok": not violated}

    def _verify_prime(self, spec: ProblemSpec, q: int) -> Dict[str, Any]:
        budget = self.budget
        check_collinearity = self.config.get("enumeration.check_collinearity", True)
        result: Dict[str, Any] = {"q": q}
        checks: List[bool] = []

        points = variety_points(self.spec_for(spec, q), budget)
        result["count_X"] = len(points)
        counts = {"direct": len(points)}

        models = {}
        for model in self.config.get("verify.models"):
            if model == "triple" and spec.e is None:
                models[model] = {"skipped": "needs d >= 2"}
                continue
            report = compare(spec, model, q, budget)
            models[model] = report.to_dict()
            counts[model] = report.count_grass
            checks.append(report.bijection_ok)
        result["models"] = models

        if spec.e is not None:
            lemma = lemma_reduction_check(spec, q, budget)
            result["lemma"] = lemma.to_dict()
            checks.append(lemma.bijection_ok)
        else:
            result["lemma"] = {"skipped": "needs d >= 2"}

        moduli = moduli_variety_bijection(spec, q, budget, check_collinearity)
        result["moduli"] = {
            "count": len(moduli.classes),
            "matched": moduli.matched,
            "failures": moduli.failures,
        }
        counts["moduli"] = len(moduli.classes)
        checks.append(moduli.matched)

        chart = uniserial_chart(spec, q, budget)
        chart_points = {iso.point() for iso in chart}
        expected = {a for a in points if a.coords[0] != 0}
        chart_ok = chart_points == expected and len(chart) == len(expected)
        result["chart"] = {"count": len(chart), "expected": len(expected), "ok": chart_ok}
        checks.append(chart_ok)

        result["equations"] = self._check_equations(spec, q)
        checks.append(result["equations"]["ok"])

        agree = len(set(counts.values())) == 1
        result["counts"] = counts
        result["counts_agree"] = agree
        checks.append(agree)

        result["ok"] = all(checks)
        logger.info(f"Verify over F_{q}: {'pass' if result['ok'] else 'fail'}")
        return result

    def _check_equations(self, spec: ProblemSpec, q: int) -> Dict[str, Any]:
        """Soundness on enumerated points; completeness by brute force or by sampling."""
        budget = self.budget
        rep = module_M_kronecker(self.spec_for(spec, q))
        system = emit_equations(rep)
        grass = enumerate_grass(rep, q, budget)

        unsound = [
            point.to_json()
            for point in grass
            if not equations_vanish(
                system, point.generator(system.source), point.generator(system.target)
            )
        ]
        result: Dict[str, Any] = {"count": len(system.equations), "unsound": unsound}

        known = {
            (p.generator(system.source), p.generator(system.target))
            for p in grass
            if not p.degenerate
        }
        try:
            solved = solve_equations_brute_force(system, budget)
            extra = [list(map(list, pair)) for pair in solved.solutions if pair not in known]
            missing = len(known - set(solved.solutions))
            result["completeness"] = {
                "method": "exhaustive",
                "solutions": len(solved.solutions),
                "extra": extra,
                "missing": missing,
                "degenerate_sources": solved.degenerate_sources,
            }
            complete = not extra and not missing
        except BudgetExceededError as e:
            logger.info(f"Equation completeness falls back to sampling: {e}")
            survivors = sample_off_grassmannian(
                system, grass, self.config.get("verify.sample_size")
            )
            result["completeness"] = {
                "method": "sampled",
                "samples": self.config.get("verify.sample_size"),
                "extra": [list(map(list, pair)) for pair in survivors],
            }
            complete = not survivors

        result["ok"] = not unsound and complete
        return result

    def render_text(self, report: RunReport) -> str:
        lines = self.header(report)
        results = report.results
        if "representation" in results:
            violated = results["representation"]["violated"]
            lines.append(
                "representation: "
                + (f"violates {', '.join(violated)}" if violated else "all relations hold")
            )
        if "relations" in results:
            rel = results["relations"]
            lines.append(f"relation lifts: {rel['count']} relations, violated {rel['violated'] or 'none'}")
        for q, result in results.get("primes", {}).items():
            lines.append(f"F_{q}: {'pass' if result['ok'] else 'fail'}  |X| = {result['count_X']}")
            for model, data in result["models"].items():
                if "skipped" in data:
                    lines.append(f"  {model}: skipped ({data['skipped']})")
                else:
                    lines.append(
                        f"  {model}: |Gr| = {data['count_grass']}, bijection "
                        f"{'ok' if data['bijection_ok'] else 'FAILED'}"
                    )
                    lines.extend(f"    {failure}" for failure in data["failures"])
            lemma = result["lemma"]
            if "skipped" in lemma:
                lines.append(f"  lemma: skipped ({lemma['skipped']})")
            else:
                lines.append(
                    f"  lemma: {lemma['count_triple']} vs {lemma['count_restricted']}, "
                    f"{'ok' if lemma['bijection_ok'] else 'FAILED'}"
                )
            lines.append(
                f"  moduli: {result['moduli']['count']} classes, "
                f"{'matched' if result['moduli']['matched'] else 'NOT matched'}"
            )
            chart = result["chart"]
            lines.append(
                f"  chart: {chart['count']} of {chart['expected']} expected, "
                f"{'ok' if chart['ok'] else 'FAILED'}"
            )
            eq = result["equations"]
            lines.append(
                f"  equations: {eq['count']}, {eq['completeness']['method']} check "
                f"{'ok' if eq['ok'] else 'FAILED'}"
            )
            lines.append(f"  counts agree: {result['counts_agree']} {result['counts']}")
        return "\n".join(lines)
