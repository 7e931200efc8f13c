"""
Quivers with relations and the module M in each model.

Orientation: the vertex of degree m carries the dual (S^mV/I_m)^*, so arrows
point from higher to lower degree. The Beilinson arrow x_j^i goes from vertex
i+1 to vertex i and acts by the transpose of multiplication by X_j. Paths are
written in composition order: the leftmost arrow is applied last, so
"x_j^i x_k^{i+1}" runs i+2 -> i+1 -> i.

Builders:
- beilinson_quiver / bounded_algebra / lift_relation: B(n, d) and its lifted relations
- modify_presentation / modified_beilinson: split x_0^0 into y0 z0
- degree_chain_quiver / module_M_degrees: one vertex per degree, one arrow per monomial
- module_M_full / module_M_triple / module_M_kronecker: M in the three models
- check_relations / restrict / JSON helpers
"""

from collections import deque
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    InadmissibleStartError,
    ProblemSpecError,
    QuiverError,
    RelationError,
    RepresentationError,
)
from .graded import ProblemSpec, mult_map, multiplication_by, quotient_slice
from .linalg import FieldSpec, Matrix, Scalar
from .poly import HomPoly, format_monomial, monomials
from .utils.logging import get_logger
from .utils.validation import validate_degree_set, validate_quiver_params

logger = get_logger(__name__)

Path = Tuple[str, ...]

# Labels of the arrows that replace x_0^0 in the modified quiver
SPLIT_VERTEX = "0'"
SPLIT_OUTER = "y0"
SPLIT_INNER = "z0"


def beilinson_label(j: int, i: int) -> str:
    return f"x{j}^{i}"


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class PathCombo:
    """Linear combination of paths; each path is in composition order."""

    terms: Tuple[Tuple[Scalar, Path], ...]
    name: str = ""

    def labels(self) -> List[str]:
        return sorted({label for _, path in self.terms for label in path})


@dataclass(frozen=True)
class QuiverPresentation:
    """
    A quiver with relations.

    levels is d for Beilinson-type presentations (None otherwise).
    substitutions maps an arrow label that no longer exists to the path
    replacing it, so relations can still be lifted after a split.
    """

    field: FieldSpec
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[PathCombo, ...] = ()
    name: str = ""
    levels: Optional[int] = None
    substitutions: Tuple[Tuple[str, Path], ...] = ()

    def __post_init__(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise QuiverError("vertex labels must be unique")
        labels = set()
        for arrow in self.arrows:
            if arrow.source not in vertex_set or arrow.target not in vertex_set:
                raise QuiverError(f"arrow {arrow.label} references an unknown vertex")
            if arrow.label in labels:
                raise QuiverError(f"duplicate arrow label {arrow.label}")
            labels.add(arrow.label)
        for relation in self.relations:
            self.combo_endpoints(relation)

    def arrow(self, label: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.label == label:
                return arrow
        raise RelationError(f"unknown arrow {label!r}")

    @property
    def arrow_map(self) -> Dict[str, Arrow]:
        return {arrow.label: arrow for arrow in self.arrows}

    def path_endpoints(self, path: Path) -> Tuple[str, str]:
        """(source, target) of a path, checking that it composes."""
        if not path:
            raise RelationError("relation paths must have length at least 1")
        arrows = [self.arrow(label) for label in path]
        for outer, inner in zip(arrows, arrows[1:]):
            if inner.target != outer.source:
                raise RelationError(
                    f"arrows {outer.label} and {inner.label} do not compose"
                )
        return arrows[-1].source, arrows[0].target

    def combo_endpoints(self, combo: PathCombo) -> Tuple[str, str]:
        endpoints = {self.path_endpoints(path) for _, path in combo.terms}
        if len(endpoints) != 1:
            raise RelationError(
                f"paths of relation {combo.name or '?'} do not share endpoints"
            )
        return endpoints.pop()

    def incoming(self, vertex: str) -> List[Arrow]:
        return [arrow for arrow in self.arrows if arrow.target == vertex]

    def outgoing(self, vertex: str) -> List[Arrow]:
        return [arrow for arrow in self.arrows if arrow.source == vertex]

    def topological_order(self) -> List[str]:
        """
        Vertices ordered so every arrow's source precedes its target.

        Raises:
            QuiverError: If the quiver has an oriented cycle
        """
        indegree = {v: 0 for v in self.vertices}
        for arrow in self.arrows:
            indegree[arrow.target] += 1
        position = {v: i for i, v in enumerate(self.vertices)}
        ready = deque(sorted((v for v in self.vertices if indegree[v] == 0), key=position.get))
        order: List[str] = []
        while ready:
            vertex = ready.popleft()
            order.append(vertex)
            for arrow in self.outgoing(vertex):
                indegree[arrow.target] -= 1
                if indegree[arrow.target] == 0:
                    ready.append(arrow.target)
        if len(order) != len(self.vertices):
            raise QuiverError("quiver has an oriented cycle")
        return order

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except QuiverError:
            return False
        return True

    def with_relations(self, relations: Iterable[PathCombo]) -> "QuiverPresentation":
        return QuiverPresentation(
            self.field,
            self.vertices,
            self.arrows,
            self.relations + tuple(relations),
            self.name,
            self.levels,
            self.substitutions,
        )


@dataclass(frozen=True)
class Representation:
    """
    Vector spaces and matrices on a presentation.

    mats[label] has shape dims[target] x dims[source]. degrees records the
    graded degree carried by each vertex when the module comes from a model.
    """

    presentation: QuiverPresentation
    dims: Mapping[str, int]
    mats: Mapping[str, Matrix]
    degrees: Mapping[str, int] = dataclass_field(default_factory=dict)
    model: str = ""

    def __post_init__(self):
        pres = self.presentation
        for vertex in pres.vertices:
            if vertex not in self.dims:
                raise RepresentationError(f"missing dimension for vertex {vertex}")
            if self.dims[vertex] < 0:
                raise RepresentationError(f"negative dimension at vertex {vertex}")
        for arrow in pres.arrows:
            if arrow.label not in self.mats:
                raise RepresentationError(f"arrow {arrow.label} has no matrix")
            matrix = self.mats[arrow.label]
            expected = (self.dims[arrow.target], self.dims[arrow.source])
            if matrix.shape != expected:
                raise RepresentationError(
                    f"matrix of {arrow.label} has shape {matrix.shape}, expected {expected}"
                )
            if matrix.field != pres.field:
                raise RepresentationError(
                    f"matrix of {arrow.label} is over {matrix.field}, expected {pres.field}"
                )

    @property
    def field(self) -> FieldSpec:
        return self.presentation.field

    def dimension_vector(self) -> List[int]:
        return [self.dims[v] for v in self.presentation.vertices]

    def arrow_matrices(self) -> List[Matrix]:
        return [self.mats[arrow.label] for arrow in self.presentation.arrows]


# Beilinson quivers and relation lifting


def beilinson_quiver(n: int, d: int, field: FieldSpec) -> QuiverPresentation:
    """
    B(n, d): vertices 0..d, arrows x_j^i from i+1 to i, commutativity relations.

    The relation for level i and j < k is x_j^i x_k^{i+1} - x_k^i x_j^{i+1}.
    """
    validate_quiver_params(n, d)
    vertices = tuple(str(i) for i in range(d + 1))
    arrows = tuple(
        Arrow(beilinson_label(j, i), str(i + 1), str(i))
        for i in range(d)
        for j in range(n + 1)
    )
    minus_one = field.neg(field.one)
    relations = tuple(
        PathCombo(
            (
                (field.one, (beilinson_label(j, i), beilinson_label(k, i + 1))),
                (minus_one, (beilinson_label(k, i), beilinson_label(j, i + 1))),
            ),
            name=f"comm[{i};{j},{k}]",
        )
        for i in range(d - 1)
        for j in range(n + 1)
        for k in range(j + 1, n + 1)
    )
    return QuiverPresentation(
        field, vertices, arrows, relations, name=f"B({n},{d})", levels=d
    )


def monomial_path(mono: Sequence[int], start: int) -> Path:
    """Path of a monomial: variables in nondecreasing order on levels start, start+1, ..."""
    variables = [j for j, exponent in enumerate(mono) for _ in range(exponent)]
    return tuple(beilinson_label(j, start + step) for step, j in enumerate(variables))


def _substitute(path: Path, substitutions: Mapping[str, Path]) -> Path:
    result: List[str] = []
    for label in path:
        result.extend(substitutions.get(label, (label,)))
    return tuple(result)


def lift_relation(
    f: HomPoly, start: int, presentation: QuiverPresentation, name: str = ""
) -> PathCombo:
    """
    Lift f to a combination of paths from vertex start + deg f to vertex start.

    Args:
        f: Homogeneous polynomial
        start: Lowest vertex the paths end at
        presentation: Beilinson-type presentation providing d and substitutions
        name: Optional relation name

    Returns:
        PathCombo with the coefficients of f

    Raises:
        InadmissibleStartError: If start + deg f exceeds d
    """
    d = presentation.levels
    if d is None:
        raise QuiverError(f"presentation {presentation.name} has no Beilinson levels")
    if start < 0 or start + f.degree > d:
        raise InadmissibleStartError(start, f.degree, d)
    if f.degree < 1:
        raise RelationError("constant polynomials cannot be lifted to paths")

    substitutions = dict(presentation.substitutions)
    terms = tuple(
        (coeff, _substitute(monomial_path(mono, start), substitutions))
        for mono, coeff in f.terms
    )
    combo = PathCombo(terms, name=name or f"{f}@{start}")
    presentation.combo_endpoints(combo)
    return combo


def admissible_starts(degree: int, d: int) -> List[int]:
    return list(range(0, d - degree + 1))


def bounded_algebra(
    spec: ProblemSpec,
    starts: Union[str, Sequence[Union[int, Sequence[int]]]] = "all",
) -> QuiverPresentation:
    """
    B(n, d) with the lifts of every f_i added to its relations.

    Args:
        spec: Problem specification
        starts: "all" for every admissible start, or one entry per f_i
            (a start vertex or a list of start vertices)

    Raises:
        InadmissibleStartError: If a requested start is not admissible
    """
    pres = beilinson_quiver(spec.n, spec.d, spec.field)
    if starts != "all" and len(starts) != spec.r:
        raise ProblemSpecError(
            f"expected {spec.r} start entries, got {len(starts)}"
        )

    lifted: List[PathCombo] = []
    for i, f in enumerate(spec.polys):
        if starts == "all":
            chosen = admissible_starts(f.degree, spec.d)
        else:
            entry = starts[i]
            chosen = [entry] if isinstance(entry, int) else list(entry)
        for start in chosen:
            lifted.append(lift_relation(f, start, pres, name=f"f{i + 1}@{start}"))

    logger.debug(
        f"Bounded algebra: {len(pres.relations)} commutativity, {len(lifted)} lifted relations"
    )
    result = pres.with_relations(lifted)
    return QuiverPresentation(
        result.field,
        result.vertices,
        result.arrows,
        result.relations,
        name=f"B({spec.n},{spec.d})/J",
        levels=spec.d,
    )


def modify_presentation(pres: QuiverPresentation) -> QuiverPresentation:
    """
    Split x_0^0 into z0: 1 -> 0' followed by y0: 0' -> 0.

    Relations are rewritten by x_0^0 -> y0 z0; lifted relations can then have
    paths of different lengths.
    """
    old = beilinson_label(0, 0)
    old_arrow = pres.arrow(old)
    replacement: Path = (SPLIT_OUTER, SPLIT_INNER)
    substitutions = {old: replacement}

    arrows: List[Arrow] = []
    for arrow in pres.arrows:
        if arrow.label == old:
            arrows.append(Arrow(SPLIT_INNER, old_arrow.source, SPLIT_VERTEX))
            arrows.append(Arrow(SPLIT_OUTER, SPLIT_VERTEX, old_arrow.target))
        else:
            arrows.append(arrow)

    relations = tuple(
        PathCombo(
            tuple((c, _substitute(path, substitutions)) for c, path in combo.terms),
            combo.name,
        )
        for combo in pres.relations
    )
    return QuiverPresentation(
        pres.field,
        (SPLIT_VERTEX,) + pres.vertices,
        tuple(arrows),
        relations,
        name=f"{pres.name}~",
        levels=pres.levels,
        substitutions=pres.substitutions + ((old, replacement),),
    )


def modified_beilinson(n: int, d: int, field: FieldSpec) -> QuiverPresentation:
    return modify_presentation(beilinson_quiver(n, d, field))


# The module M in each model


def degree_chain_quiver(
    n: int, degrees: Sequence[int], field: FieldSpec
) -> QuiverPresentation:
    """
    One vertex per degree; between consecutive degrees m < m', one arrow per
    monomial of degree m' - m from the m' vertex to the m vertex.

    Arrow labels are "<monomial>@<lower vertex>", e.g. "X0*X1@0".
    """
    degrees = validate_degree_set(degrees)
    vertices = tuple(str(t) for t in range(len(degrees)))
    arrows = tuple(
        Arrow(f"{format_monomial(mono)}@{t}", str(t + 1), str(t))
        for t in range(len(degrees) - 1)
        for mono in monomials(n, degrees[t + 1] - degrees[t])
    )
    return QuiverPresentation(
        field, vertices, arrows, name=f"chain{tuple(degrees)}"
    )


def module_M_degrees(spec: ProblemSpec, degrees: Sequence[int]) -> Representation:
    """M restricted to a degree set: each arrow is the transpose of multiplication by its monomial."""
    degrees = validate_degree_set(degrees)
    pres = degree_chain_quiver(spec.n, degrees, spec.field)
    dims = {str(t): quotient_slice(spec, m).dim for t, m in enumerate(degrees)}
    mats: Dict[str, Matrix] = {}
    for t in range(len(degrees) - 1):
        for mono in monomials(spec.n, degrees[t + 1] - degrees[t]):
            label = f"{format_monomial(mono)}@{t}"
            mats[label] = multiplication_by(spec, degrees[t], mono).transpose()
    return Representation(
        pres,
        dims,
        mats,
        degrees={str(t): m for t, m in enumerate(degrees)},
        model="degrees",
    )


def module_M_triple(spec: ProblemSpec) -> Representation:
    """M on the degrees 0, e, d; vertex 0 is the one-dimensional socle."""
    if spec.e is None:
        raise ProblemSpecError(f"the triple model needs d >= 2, got d={spec.d}")
    rep = module_M_degrees(spec, [0, spec.e, spec.d])
    return _with_model(rep, "triple")


def module_M_kronecker(spec: ProblemSpec) -> Representation:
    """M = ((S^{d-1}V/I_{d-1})^*, (S^dV/I_d)^*) with n+1 arrows from vertex 1 to vertex 0."""
    rep = module_M_degrees(spec, [spec.d - 1, spec.d])
    return _with_model(rep, "kronecker")


def _with_model(rep: Representation, model: str) -> Representation:
    return Representation(rep.presentation, rep.dims, rep.mats, rep.degrees, model)


def module_M_full(
    spec: ProblemSpec, presentation: Optional[QuiverPresentation] = None
) -> Representation:
    """
    M on the whole chain 0..d over the bounded Beilinson algebra.

    The matrix of x_j^i is the transpose of mult_map(i, j).
    """
    pres = presentation or bounded_algebra(spec, "all")
    dims = {str(m): quotient_slice(spec, m).dim for m in range(spec.d + 1)}
    mats = {
        beilinson_label(j, i): mult_map(spec, i, j).matrix.transpose()
        for i in range(spec.d)
        for j in range(spec.n + 1)
    }
    return Representation(
        pres, dims, mats, degrees={str(m): m for m in range(spec.d + 1)}, model="full"
    )


def modify_representation(rep: Representation) -> Representation:
    """
    Carry a Beilinson-chain module to the modified quiver.

    The split vertex copies vertex 0: z0 acts like x_0^0 and y0 is the identity.
    """
    old = beilinson_label(0, 0)
    pres = modify_presentation(rep.presentation)
    dims = dict(rep.dims)
    dims[SPLIT_VERTEX] = rep.dims["0"]
    mats = {label: m for label, m in rep.mats.items() if label != old}
    mats[SPLIT_INNER] = rep.mats[old]
    mats[SPLIT_OUTER] = Matrix.identity(rep.field, rep.dims["0"])
    degrees = dict(rep.degrees)
    if "0" in rep.degrees:
        degrees[SPLIT_VERTEX] = rep.degrees["0"]
    return Representation(pres, dims, mats, degrees, model="modified")


def build_model(
    spec: ProblemSpec, model: str, degrees: Optional[Sequence[int]] = None
) -> Tuple[QuiverPresentation, Representation]:
    """
    Presentation and module for one of the named models.

    Args:
        spec: Problem specification
        model: beilinson, modified, full, triple, kronecker or degrees
        degrees: Degree set for the degrees model

    Raises:
        ProblemSpecError: If the model is unknown or cannot be built for spec
    """
    if model in ("beilinson", "full"):
        rep = module_M_full(spec)
    elif model == "modified":
        rep = modify_representation(module_M_full(spec))
    elif model == "triple":
        rep = module_M_triple(spec)
    elif model == "kronecker":
        rep = module_M_kronecker(spec)
    elif model == "degrees":
        if degrees is None:
            raise ProblemSpecError("the degrees model needs a degree set")
        if max(degrees) > spec.d:
            spec = spec.with_degrees(d=max(degrees), e=None)
        rep = module_M_degrees(spec, degrees)
    else:
        raise ProblemSpecError(f"unknown model {model!r}")
    return rep.presentation, rep


# Relations and restriction


def evaluate_path(rep: Representation, path: Path) -> Matrix:
    matrices = []
    for label in path:
        if label not in rep.mats:
            raise RepresentationError(f"arrow {label} has no matrix")
        matrices.append(rep.mats[label])
    result = matrices[0]
    for matrix in matrices[1:]:
        result = result @ matrix
    return result


def evaluate_combo(rep: Representation, combo: PathCombo) -> Matrix:
    total: Optional[Matrix] = None
    for coeff, path in combo.terms:
        value = evaluate_path(rep, path).scale(coeff)
        total = value if total is None else total + value
    if total is None:
        raise RelationError(f"relation {combo.name} has no terms")
    return total


def check_relations(pres: QuiverPresentation, rep: Representation) -> List[str]:
    """
    Names of the relations of pres that do not vanish on rep.

    Raises:
        RepresentationError: If a relation uses an arrow rep has no matrix for
    """
    violated = []
    for index, combo in enumerate(pres.relations):
        if not evaluate_combo(rep, combo).is_zero():
            violated.append(combo.name or f"relation {index}")
    if violated:
        logger.debug(f"Relation check: {len(violated)} of {len(pres.relations)} violated")
    return violated


def restrict(rep: Representation, vertices: Sequence[str]) -> Representation:
    """Full subquiver on the given vertices with the relations that only use kept arrows."""
    pres = rep.presentation
    keep = [v for v in pres.vertices if v in set(vertices)]
    missing = set(vertices) - set(pres.vertices)
    if missing:
        raise RepresentationError(f"unknown vertices {sorted(missing)}")

    arrows = tuple(
        arrow for arrow in pres.arrows if arrow.source in keep and arrow.target in keep
    )
    labels = {arrow.label for arrow in arrows}
    relations = tuple(
        combo for combo in pres.relations if set(combo.labels()) <= labels
    )
    sub = QuiverPresentation(
        pres.field, tuple(keep), arrows, relations, name=f"{pres.name}|{','.join(keep)}"
    )
    return Representation(
        sub,
        {v: rep.dims[v] for v in keep},
        {label: rep.mats[label] for label in labels},
        {v: rep.degrees[v] for v in keep if v in rep.degrees},
        rep.model,
    )


# JSON


def presentation_to_json(pres: QuiverPresentation) -> Dict[str, Any]:
    field = pres.field
    return {
        "name": pres.name,
        "field": field.to_json(),
        "vertices": list(pres.vertices),
        "arrows": [
            {"label": a.label, "src": a.source, "tgt": a.target} for a in pres.arrows
        ],
        "relations": [
            {
                "name": combo.name,
                "terms": [
                    {"coeff": field.format(c), "path": list(path)}
                    for c, path in combo.terms
                ],
            }
            for combo in pres.relations
        ],
    }


def presentation_from_json(data: Mapping[str, Any]) -> QuiverPresentation:
    """
    Raises:
        QuiverError: If the description is malformed
    """
    try:
        field = FieldSpec.from_json(data["field"])
        arrows = tuple(
            Arrow(str(a["label"]), str(a["src"]), str(a["tgt"])) for a in data["arrows"]
        )
        relations = tuple(
            PathCombo(
                tuple(
                    (field.parse(str(t["coeff"])), tuple(str(x) for x in t["path"]))
                    for t in combo["terms"]
                ),
                str(combo.get("name", "")),
            )
            for combo in data.get("relations", [])
        )
        vertices = tuple(str(v) for v in data["vertices"])
    except (KeyError, TypeError) as e:
        raise QuiverError(f"malformed presentation: {e}") from e
    return QuiverPresentation(field, vertices, arrows, relations, str(data.get("name", "")))


def representation_to_json(rep: Representation) -> Dict[str, Any]:
    return {
        "model": rep.model,
        "presentation": presentation_to_json(rep.presentation),
        "dims": {v: rep.dims[v] for v in rep.presentation.vertices},
        "degrees": dict(rep.degrees),
        "matrices": {
            arrow.label: rep.mats[arrow.label].to_json()
            for arrow in rep.presentation.arrows
        },
    }


def representation_from_json(data: Mapping[str, Any]) -> Representation:
    """
    Raises:
        QuiverError: If the description is malformed or shapes do not fit
    """
    if "presentation" not in data:
        raise RepresentationError("malformed representation: missing 'presentation'")
    pres = presentation_from_json(data["presentation"])
    try:
        dims = {str(v): int(k) for v, k in data["dims"].items()}
        mats = {}
        for arrow in pres.arrows:
            rows = data["matrices"][arrow.label]
            mats[arrow.label] = Matrix.from_json(
                pres.field, rows, dims[arrow.target], dims[arrow.source]
            )
        degrees = {str(v): int(m) for v, m in data.get("degrees", {}).items()}
    except (KeyError, TypeError, ValueError) as e:
        raise RepresentationError(f"malformed representation: {e}") from e
    return Representation(pres, dims, mats, degrees, str(data.get("model", "")))
