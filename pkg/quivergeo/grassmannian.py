"""
Thin quiver grassmannians of M over prime fields.

Contains:
- variety_points: X(F_q) by brute force over P^n(F_q)
- enumerate_grass: all submodules of dimension vector (1, ..., 1)
- veronese_point / compare: the evaluation-functional bijection X(F_q) -> Gr
- lemma_reduction_check: (1,1,1)-points of the triple model vs (1,1)-points
  of its restriction to the two upper vertices
- emit_equations / solve_equations_brute_force: bilinear 2x2-minor equations
  of the Kronecker grassmannian and their solution set
"""

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .constants import DEFAULT_SAMPLE_SEED
from .errors import (
    BudgetExceededError,
    EnumerationUnsupportedError,
    FieldMismatchError,
    InconsistencyError,
    LemmaHypothesisError,
    PointNotOnVarietyError,
    QuiverError,
)
from .graded import ProblemSpec, evaluation_vector
from .linalg import FieldSpec, Matrix, Scalar, canonical_vector, kernel_basis
from .poly import HomPoly, ProjPoint, evaluate, format_poly, vanishes_at
from .quivers import Representation, build_model, module_M_triple, restrict
from .utils.enumeration import check_budget, count_projective_points, projective_points
from .utils.logging import get_logger, log_enumeration_info

logger = get_logger(__name__)

Vector = Tuple[int, ...]


def spec_over(spec: ProblemSpec, q: int) -> ProblemSpec:
    """
    The problem over F_q.

    Rational problems are base-changed; a problem fixed over F_p only admits q = p.

    Raises:
        FieldMismatchError: If spec is over a different prime field
    """
    target = FieldSpec.prime(q)
    if spec.field.is_prime_field:
        if spec.field != target:
            raise FieldMismatchError(
                f"problem is defined over {spec.field}, cannot enumerate over {target}",
                str(spec.field),
                str(target),
            )
        return spec
    return spec.with_field(target)


def require_prime_field(field: FieldSpec) -> int:
    if not field.is_prime_field:
        raise EnumerationUnsupportedError(
            "enumeration needs a prime field; rerun with a prime q"
        )
    return field.p


@dataclass(frozen=True)
class GrassPoint:
    """
    A thin submodule: one canonical generator per vertex.

    degenerate marks points where some vertex had only zero incoming images
    while having incoming arrows, so its line was not determined.
    """

    generators: Tuple[Tuple[str, Vector], ...]
    degenerate: bool = dataclass_field(default=False, compare=False)

    def generator(self, vertex: str) -> Vector:
        for v, vector in self.generators:
            if v == vertex:
                return vector
        raise KeyError(vertex)

    def to_json(self) -> Dict[str, List[int]]:
        return {v: list(vector) for v, vector in self.generators}


@dataclass
class ComparisonReport:
    """Result of comparing X(F_q) with the grassmannian of one model."""

    model: str
    q: int
    count_X: int = 0
    count_grass: int = 0
    degenerate: List[Dict[str, List[int]]] = dataclass_field(default_factory=list)
    bijection_ok: bool = False
    failures: List[str] = dataclass_field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "q": self.q,
            "count_X": self.count_X,
            "count_grass": self.count_grass,
            "degenerate": self.degenerate,
            "bijection_ok": self.bijection_ok,
            "failures": self.failures,
        }


@dataclass
class LemmaReport:
    """Result of the unique-extension check across the one-dimensional vertex."""

    q: int
    count_triple: int = 0
    count_restricted: int = 0
    extension_failures: List[str] = dataclass_field(default_factory=list)
    bijection_ok: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "count_triple": self.count_triple,
            "count_restricted": self.count_restricted,
            "extension_failures": self.extension_failures,
            "bijection_ok": self.bijection_ok,
        }


def variety_points(spec: ProblemSpec, budget: Optional[int] = None) -> List[ProjPoint]:
    """
    All points of X over the prime field of spec, in projective_points order.

    Raises:
        EnumerationUnsupportedError: If spec is over the rationals
        BudgetExceededError: If |P^n(F_q)| exceeds the budget
    """
    q = require_prime_field(spec.field)
    check_budget(f"P^{spec.n}(F_{q})", count_projective_points(q, spec.n + 1), budget)
    points = [
        ProjPoint(spec.field, coords)
        for coords in projective_points(q, spec.n + 1)
        if vanishes_at(spec.polys, coords)
    ]
    log_enumeration_info(
        logger, f"P^{spec.n}", q, count_projective_points(q, spec.n + 1), len(points)
    )
    return points


def estimate_grass_candidates(rep: Representation, q: int) -> int:
    """Product of |P(M_v)| over sink vertices: the line choices the search starts from."""
    estimate = 1
    for vertex in rep.presentation.vertices:
        if not rep.presentation.outgoing(vertex):
            estimate *= max(count_projective_points(q, rep.dims[vertex]), 1)
    return estimate


def _matvec(rows: Sequence[Sequence[int]], v: Sequence[int], p: int) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in rows)


def _canonical(v: Sequence[int], p: int) -> Optional[Vector]:
    for x in v:
        if x:
            inverse = pow(x, -1, p)
            return tuple(y * inverse % p for y in v)
    return None


def _lines_in_span(basis: Sequence[Vector], p: int) -> Iterator[Vector]:
    """Canonical generators of every line in span(basis); basis must be independent."""
    if not basis:
        return
    length = len(basis[0])
    for coeffs in projective_points(p, len(basis)):
        combination = [0] * length
        for c, vector in zip(coeffs, basis):
            if c:
                for i, x in enumerate(vector):
                    combination[i] += c * x
        yield _canonical([x % p for x in combination], p)


def _line_condition(rows: Sequence[Sequence[int]], line: Vector, p: int) -> List[List[int]]:
    """Rows r with r x = 0 iff (rows x) lies in span(line); line is canonical."""
    lead = next(i for i, x in enumerate(line) if x)
    return [
        [(a - line[s] * b) % p for a, b in zip(rows[s], rows[lead])]
        for s in range(len(line))
        if s != lead
    ]


def enumerate_grass(
    rep: Representation, q: Optional[int] = None, budget: Optional[int] = None
) -> List[GrassPoint]:
    """
    All thin submodules of rep over its prime field.

    Vertices are visited sinks first. Once the lines at the targets of a
    vertex are fixed, the admissible generators there are the nonzero
    vectors x with A x in the target line for every outgoing arrow A, a
    linear subspace, so only its lines are tried. A point is degenerate when
    some vertex with incoming arrows receives only zero images, leaving its
    line undetermined by the rest of the submodule.

    Args:
        rep: Representation over F_q on an acyclic quiver
        q: Optional check that rep is over F_q
        budget: Candidate cap, checked against the sink-line estimate up
            front and against the visited count while searching

    Returns:
        Points sorted by their generators in vertex order

    Raises:
        EnumerationUnsupportedError: If rep is over the rationals
        BudgetExceededError: If the candidate count exceeds budget
    """
    p = require_prime_field(rep.field)
    if q is not None and q != p:
        raise FieldMismatchError(
            f"representation is over F_{p}, not F_{q}", f"F_{p}", f"F_{q}"
        )
    pres = rep.presentation
    what = f"grassmannian {pres.name}"
    if any(rep.dims[v] == 0 for v in pres.vertices):
        log_enumeration_info(logger, what, p, 0, 0)
        return []

    order = list(reversed(pres.topological_order()))
    check_budget(what, estimate_grass_candidates(rep, p), budget)

    outgoing = {
        v: [(arrow.target, rep.mats[arrow.label].to_lists()) for arrow in pres.outgoing(v)]
        for v in order
    }
    incoming = {
        v: [(arrow.source, rep.mats[arrow.label].to_lists()) for arrow in pres.incoming(v)]
        for v in order
    }
    chosen: Dict[str, Vector] = {}
    found: List[GrassPoint] = []
    visited = 0

    def is_degenerate() -> bool:
        return any(
            incoming[v]
            and all(not any(_matvec(rows, chosen[source], p)) for source, rows in incoming[v])
            for v in order
        )

    def visit(position: int) -> None:
        nonlocal visited
        if position == len(order):
            generators = tuple((v, chosen[v]) for v in pres.vertices)
            found.append(GrassPoint(generators, is_degenerate()))
            return

        vertex = order[position]
        conditions: List[List[int]] = []
        for target, rows in outgoing[vertex]:
            conditions.extend(_line_condition(rows, chosen[target], p))
        admissible = kernel_basis(Matrix.from_rows(rep.field, conditions, rep.dims[vertex]))
        for line in _lines_in_span(admissible, p):
            visited += 1
            if budget is not None and visited > budget:
                raise BudgetExceededError(what, visited, budget)
            chosen[vertex] = line
            visit(position + 1)
        chosen.pop(vertex, None)

    visit(0)
    found.sort(key=lambda point: point.generators)
    log_enumeration_info(
        logger, what, p, visited, len(found), sum(point.degenerate for point in found)
    )
    return found


def is_submodule_point(rep: Representation, point: GrassPoint) -> bool:
    """Whether every arrow maps the source generator into the target line."""
    field = rep.field
    for arrow in rep.presentation.arrows:
        image = rep.mats[arrow.label].matvec(point.generator(arrow.source))
        canonical = canonical_vector(field, image)
        if canonical is not None and canonical != point.generator(arrow.target):
            return False
    return True


def veronese_point(
    a: ProjPoint,
    model: str,
    spec: ProblemSpec,
    rep: Optional[Representation] = None,
    degrees: Optional[Sequence[int]] = None,
) -> GrassPoint:
    """
    The grassmannian point of a in one model.

    The generator at a vertex of degree m is the evaluation functional at a
    on S^mV/I_m.

    Raises:
        PointNotOnVarietyError: If a does not lie on X
        InconsistencyError: If an evaluation functional vanishes or the
            generators do not form a submodule
    """
    if not vanishes_at(spec.polys, a):
        raise PointNotOnVarietyError(f"{a} does not lie on X")
    if rep is None:
        _, rep = build_model(spec, model, degrees)

    generators = []
    for vertex in rep.presentation.vertices:
        m = rep.degrees[vertex]
        vector = canonical_vector(spec.field, evaluation_vector(spec, a, m))
        if vector is None:
            raise InconsistencyError(
                f"evaluation at {a} vanishes on S^{m}V/I_{m} in the {model} model"
            )
        generators.append((vertex, vector))

    point = GrassPoint(tuple(generators))
    if not is_submodule_point(rep, point):
        raise InconsistencyError(
            f"evaluation generators of {a} do not span a submodule in the {model} model"
        )
    return point


def compare(
    spec: ProblemSpec,
    model: str,
    q: int,
    budget: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> ComparisonReport:
    """
    Check that a -> veronese_point(a) is a bijection X(F_q) -> Gr(model).

    Failures become report content; only input errors raise.
    """
    spec = spec_over(spec, q)
    _, rep = build_model(spec, model, degrees)

    report = ComparisonReport(model=model, q=q)
    points = variety_points(spec, budget)
    grass = enumerate_grass(rep, q, budget)
    report.count_X = len(points)
    report.count_grass = len(grass)
    report.degenerate = [point.to_json() for point in grass if point.degenerate]
    if report.degenerate:
        report.failures.append(f"{len(report.degenerate)} degenerate grassmannian points")

    grass_set = set(grass)
    images: Dict[GrassPoint, ProjPoint] = {}
    for a in points:
        try:
            image = veronese_point(a, model, spec, rep=rep)
        except InconsistencyError as e:
            logger.error(f"Counterexample at {a}: {e}")
            report.failures.append(str(e))
            continue
        if image in images:
            report.failures.append(f"{a} and {images[image]} have the same image")
        elif image not in grass_set:
            report.failures.append(f"image of {a} is not an enumerated point")
        images[image] = a

    missed = len(grass_set - set(images))
    if missed:
        report.failures.append(f"{missed} grassmannian points are not images of X")

    report.bijection_ok = not report.failures and report.count_X == report.count_grass
    logger.info(
        f"Compare {model} over F_{q}: |X|={report.count_X}, |Gr|={report.count_grass}, "
        f"ok={report.bijection_ok}"
    )
    return report


def lemma_reduction_check(
    spec: ProblemSpec, q: int, budget: Optional[int] = None
) -> LemmaReport:
    """
    Restriction from (1,1,1)-points of the triple model to (1,1)-points of its
    upper two vertices is a bijection.

    Each (1,1)-point is extended by the unique line of the one-dimensional
    vertex 0; the extension must be a submodule and appear in the triple
    enumeration, and every triple point must restrict to an enumerated point.

    Raises:
        LemmaHypothesisError: If vertex 0 is not one-dimensional
    """
    spec = spec_over(spec, q)
    rep = module_M_triple(spec)
    if rep.dims["0"] != 1:
        raise LemmaHypothesisError(
            f"vertex 0 of the triple model has dimension {rep.dims['0']}, expected 1"
        )
    upper = restrict(rep, ["1", "2"])

    report = LemmaReport(q=q)
    triple_points = enumerate_grass(rep, q, budget)
    upper_points = enumerate_grass(upper, q, budget)
    report.count_triple = len(triple_points)
    report.count_restricted = len(upper_points)

    triple_set = set(triple_points)
    for point in upper_points:
        generators = {v: g for v, g in point.generators}
        generators["0"] = (1,)
        extended = GrassPoint(tuple((v, generators[v]) for v in rep.presentation.vertices))
        if not is_submodule_point(rep, extended):
            report.extension_failures.append(f"{point.to_json()} does not extend")
        elif extended not in triple_set:
            report.extension_failures.append(f"extension of {point.to_json()} was not enumerated")

    upper_set = set(upper_points)
    for point in triple_points:
        restricted = GrassPoint(tuple((v, point.generator(v)) for v in ("1", "2")))
        if restricted not in upper_set:
            report.extension_failures.append(
                f"restriction of {point.to_json()} was not enumerated"
            )

    report.bijection_ok = (
        not report.extension_failures and report.count_triple == report.count_restricted
    )
    return report


# Equations


@dataclass(frozen=True)
class EquationSystem:
    """
    Bilinear equations of the thin grassmannian of a two-vertex representation.

    Variables are u (source vertex) followed by w (target vertex).
    """

    field: FieldSpec
    source: str
    target: str
    source_dim: int
    target_dim: int
    names: Tuple[str, ...]
    equations: Tuple[Tuple[str, HomPoly], ...]
    arrow_matrices: Tuple[Matrix, ...]

    def to_text(self) -> List[str]:
        return [format_poly(f, self.names) for _, f in self.equations]

    def to_json(self) -> List[Dict[str, str]]:
        return [
            {"label": label, "equation": format_poly(f, self.names)}
            for label, f in self.equations
        ]


def _two_vertex_ends(rep: Representation) -> Tuple[str, str]:
    pres = rep.presentation
    if len(pres.vertices) != 2:
        raise QuiverError(
            f"equations need a two-vertex representation, got {len(pres.vertices)} vertices"
        )
    sources = {arrow.source for arrow in pres.arrows}
    targets = {arrow.target for arrow in pres.arrows}
    if len(sources) != 1 or len(targets) != 1 or sources == targets:
        raise QuiverError("equations need all arrows to point the same way")
    return sources.pop(), targets.pop()


def emit_equations(
    rep: Representation, names: Optional[Sequence[str]] = None
) -> EquationSystem:
    """
    2x2 minors of [A_j u | w] for every arrow A_j.

    The minor for rows p < s is (A_j u)_p w_s - (A_j u)_s w_p. Minors that
    vanish identically are dropped.

    Args:
        rep: Kronecker-shaped representation
        names: Variable names for u then w (default u0.., w0..)

    Raises:
        QuiverError: If rep does not have two vertices with parallel arrows
    """
    source, target = _two_vertex_ends(rep)
    field = rep.field
    du, dw = rep.dims[source], rep.dims[target]
    if names is None:
        names = [f"u{i}" for i in range(du)] + [f"w{i}" for i in range(dw)]
    names = tuple(names)
    nvars = du + dw
    if len(names) != nvars:
        raise QuiverError(f"expected {nvars} variable names, got {len(names)}")

    def unit(*positions: int) -> Tuple[int, ...]:
        exponents = [0] * nvars
        for position in positions:
            exponents[position] += 1
        return tuple(exponents)

    equations: List[Tuple[str, HomPoly]] = []
    matrices = []
    for arrow in rep.presentation.arrows:
        rows = rep.mats[arrow.label].entries
        matrices.append(rep.mats[arrow.label])
        for p in range(dw):
            for s in range(p + 1, dw):
                terms: Dict[Tuple[int, ...], Scalar] = {}
                for i in range(du):
                    if rows[p][i] != 0:
                        key = unit(i, du + s)
                        terms[key] = field.add(terms.get(key, field.zero), rows[p][i])
                    if rows[s][i] != 0:
                        key = unit(i, du + p)
                        terms[key] = field.sub(terms.get(key, field.zero), rows[s][i])
                f = HomPoly.from_terms(nvars - 1, field, terms, degree=2)
                if not f.is_zero():
                    equations.append((f"{arrow.label}[{p},{s}]", f))

    logger.debug(f"Emitted {len(equations)} equations in {nvars} variables")
    return EquationSystem(
        field, source, target, du, dw, names, tuple(equations), tuple(matrices)
    )


def equations_vanish(system: EquationSystem, u: Sequence[Scalar], w: Sequence[Scalar]) -> bool:
    coords = tuple(u) + tuple(w)
    return all(evaluate(f, coords) == 0 for _, f in system.equations)


def _bilinear_tables(system: EquationSystem) -> List[List[Tuple[int, int, int]]]:
    """Each equation as (u index, w index, coefficient) triples."""
    du = system.source_dim
    tables = []
    for _, f in system.equations:
        table = []
        for mono, coeff in f.terms:
            u_index = next(i for i in range(du) if mono[i])
            w_index = next(i for i in range(du, len(mono)) if mono[i]) - du
            table.append((u_index, w_index, coeff))
        tables.append(table)
    return tables


@dataclass
class SolutionSet:
    solutions: List[Tuple[Vector, Vector]]
    degenerate_sources: int


def solve_equations_brute_force(
    system: EquationSystem, budget: Optional[int] = None
) -> SolutionSet:
    """
    All (u, w) in P(source) x P(target) on which every equation vanishes.

    For fixed u the equations are linear in w, so the w solving them are the
    lines of one kernel. Pairs whose u is killed by every arrow are counted,
    not returned: the equations put no condition on w there.

    Raises:
        EnumerationUnsupportedError: Over the rationals
        BudgetExceededError: If |P(source)| * |P(target)| exceeds budget
    """
    p = require_prime_field(system.field)
    du, dw = system.source_dim, system.target_dim
    pairs = count_projective_points(p, du) * count_projective_points(p, dw)
    check_budget("equation solutions", pairs, budget)
    tables = _bilinear_tables(system)
    matrices = [m.to_lists() for m in system.arrow_matrices]

    result = SolutionSet(solutions=[], degenerate_sources=0)
    for u in projective_points(p, du):
        if all(not any(_matvec(rows, u, p)) for rows in matrices):
            result.degenerate_sources += 1
            continue
        forms = []
        for table in tables:
            form = [0] * dw
            for i, t, coeff in table:
                form[t] = (form[t] + coeff * u[i]) % p
            forms.append(form)
        kernel = kernel_basis(Matrix.from_rows(system.field, forms, dw))
        for w in _lines_in_span(kernel, p):
            result.solutions.append((u, w))

    log_enumeration_info(
        logger,
        "equation solutions",
        p,
        pairs,
        len(result.solutions),
        result.degenerate_sources,
    )
    return result


def sample_off_grassmannian(
    system: EquationSystem,
    grass: Sequence[GrassPoint],
    samples: int,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> List[Tuple[Vector, Vector]]:
    """
    Random (u, w) pairs outside the grassmannian on which every equation vanishes.

    An empty result means the sampled points were all cut out.
    """
    p = require_prime_field(system.field)
    rng = random.Random(seed)
    known: Set[Tuple[Vector, Vector]] = {
        (point.generator(system.source), point.generator(system.target))
        for point in grass
    }
    matrices = [m.to_lists() for m in system.arrow_matrices]
    survivors = []
    for _ in range(samples):
        u = _canonical([rng.randrange(p) for _ in range(system.source_dim)], p)
        w = _canonical([rng.randrange(p) for _ in range(system.target_dim)], p)
        if u is None or w is None or (u, w) in known:
            continue
        if all(not any(_matvec(rows, u, p)) for rows in matrices):
            continue
        if equations_vanish(system, u, w):
            survivors.append((u, w))
    return survivors
