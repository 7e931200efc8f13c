"""
Thin sincere modules over the bounded Beilinson algebra and its modified quiver.

A thin module assigns a scalar to every arrow. Over B(n, d) these are the
level vectors c_i = (c_{0,i}, ..., c_{n,i}) of the arrows x_j^i (vertex i+1
to vertex i). Over the modified quiver x_0^0 is replaced by z0 then y0; the
module then stores y0 in place of c_{0,0} and z0 in `split`.

The torus (one nonzero scalar per vertex) rescales level i by t_i / t_{i+1},
so isomorphism classes are classified by canonical projective level vectors.
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import InconsistencyError, QuiverError
from .graded import ProblemSpec
from .grassmannian import require_prime_field, spec_over, variety_points
from .linalg import FieldSpec, Matrix, Scalar, canonical_vector, kernel_basis
from .poly import ProjPoint
from .quivers import (
    SPLIT_INNER,
    SPLIT_OUTER,
    SPLIT_VERTEX,
    PathCombo,
    QuiverPresentation,
    beilinson_label,
    beilinson_quiver,
    bounded_algebra,
    modify_presentation,
)
from .utils.enumeration import (
    affine_points,
    check_budget,
    projective_points,
)
from .utils.logging import get_logger, log_enumeration_info

logger = get_logger(__name__)

LevelVector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class ThinModule:
    """Arrow scalars of a thin module on B(n, d) or its modified quiver."""

    field: FieldSpec
    levels: Tuple[LevelVector, ...]
    split: Optional[Scalar] = None

    def __post_init__(self):
        if not self.levels:
            raise QuiverError("a thin module needs at least one level")
        widths = {len(level) for level in self.levels}
        if len(widths) != 1:
            raise QuiverError("all level vectors must have the same length")
        for level in self.levels:
            for value in level:
                self.field.check(value)
        if self.split is not None:
            self.field.check(self.split)

    @property
    def n(self) -> int:
        return len(self.levels[0]) - 1

    @property
    def d(self) -> int:
        return len(self.levels)

    @property
    def is_modified(self) -> bool:
        return self.split is not None

    @property
    def composite(self) -> Scalar:
        """Scalar of the path y0 z0 (or of x_0^0 when unsplit)."""
        if self.split is None:
            return self.levels[0][0]
        return self.field.mul(self.levels[0][0], self.split)

    def vertices(self) -> List[str]:
        names = [str(i) for i in range(self.d + 1)]
        return ([SPLIT_VERTEX] + names) if self.is_modified else names

    def arrow_values(self) -> Dict[str, Tuple[str, str, Scalar]]:
        """label -> (source, target, scalar)."""
        values: Dict[str, Tuple[str, str, Scalar]] = {}
        for i, level in enumerate(self.levels):
            for j, c in enumerate(level):
                if self.is_modified and i == 0 and j == 0:
                    continue
                values[beilinson_label(j, i)] = (str(i + 1), str(i), c)
        if self.is_modified:
            values[SPLIT_INNER] = ("1", SPLIT_VERTEX, self.split)
            values[SPLIT_OUTER] = (SPLIT_VERTEX, "0", self.levels[0][0])
        return values

    def scalars(self) -> Dict[str, Scalar]:
        return _level_scalars(self.levels, self.split)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "levels": [[self.field.format(c) for c in level] for level in self.levels]
        }
        if self.is_modified:
            data["z0"] = self.field.format(self.split)
            data["y0"] = self.field.format(self.levels[0][0])
        return data


@dataclass(frozen=True)
class ThinIsoClass:
    """Torus orbit of a thin module, stored by its normal form."""

    normal_form: ThinModule

    def point(self) -> Optional[ProjPoint]:
        """
        The common projective point of the levels, or None if they disagree.

        For modified modules level 0 is read with the composite y0 z0 in
        coordinate 0.
        """
        module = self.normal_form
        field = module.field
        level0 = (module.composite,) + tuple(module.levels[0][1:])
        canonical = [canonical_vector(field, level0)] + [
            canonical_vector(field, level) for level in module.levels[1:]
        ]
        if canonical[0] is None or any(c != canonical[0] for c in canonical):
            return None
        return ProjPoint(field, canonical[0])

    def to_json(self) -> Dict[str, Any]:
        return self.normal_form.to_json()


def _level_scalars(
    levels: Sequence[LevelVector], split: Optional[Scalar]
) -> Dict[str, Scalar]:
    scalars = {
        beilinson_label(j, i): c
        for i, level in enumerate(levels)
        for j, c in enumerate(level)
    }
    if split is not None and levels:
        del scalars[beilinson_label(0, 0)]
        scalars[SPLIT_INNER] = split
        scalars[SPLIT_OUTER] = levels[0][0]
    return scalars


def relation_value(combo: PathCombo, scalars: Mapping[str, Scalar], field: FieldSpec) -> Scalar:
    total = field.zero
    for coeff, path in combo.terms:
        term = coeff
        for label in path:
            term = field.mul(term, scalars[label])
        total = field.add(total, term)
    return total


def satisfies_relations(module: ThinModule, pres: QuiverPresentation) -> bool:
    scalars = module.scalars()
    return all(
        relation_value(combo, scalars, module.field) == 0 for combo in pres.relations
    )


def _components(module: ThinModule) -> int:
    """Connected components of the support graph (arrows with nonzero scalar)."""
    parent = {v: v for v in module.vertices()}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for source, target, value in module.arrow_values().values():
        if value != 0:
            parent[find(source)] = find(target)
    return len({find(v) for v in parent})


def is_indecomposable_thin(module: ThinModule) -> bool:
    """
    Whether a thin module is indecomposable, i.e. its support graph is connected.

    On B(n, d) this means no level vector is zero.
    """
    return _components(module) == 1


def endomorphism_dim(module: ThinModule) -> int:
    """
    dim End(module): tuples (lambda_v) with lambda_target * c = c * lambda_source
    for every arrow, computed as a kernel dimension.
    """
    field = module.field
    vertices = module.vertices()
    column = {v: k for k, v in enumerate(vertices)}
    rows = []
    for source, target, value in module.arrow_values().values():
        row = [field.zero] * len(vertices)
        row[column[target]] = field.add(row[column[target]], value)
        row[column[source]] = field.sub(row[column[source]], value)
        rows.append(row)
    system = Matrix(field, len(rows), len(vertices), tuple(tuple(r) for r in rows))
    return len(kernel_basis(system))


# Torus action


def rescale(
    module: ThinModule, t: Sequence[Scalar], t_split: Optional[Scalar] = None
) -> ThinModule:
    """
    Act by vertex scalars t_0..t_d (and t_split on the split vertex).

    The arrow from vertex u to vertex v is multiplied by t_v / t_u.
    """
    field = module.field
    if len(t) != module.d + 1:
        raise QuiverError(f"expected {module.d + 1} vertex scalars, got {len(t)}")
    if any(s == 0 for s in t) or (module.is_modified and not t_split):
        raise QuiverError("vertex scalars must be nonzero")

    levels = []
    for i, level in enumerate(module.levels):
        factor = field.div(t[i], t[i + 1])
        levels.append(tuple(field.mul(factor, c) for c in level))

    split = None
    if module.is_modified:
        # y0: 0' -> 0 and z0: 1 -> 0'
        y0 = field.mul(field.div(t[0], t_split), module.levels[0][0])
        split = field.mul(field.div(t_split, t[1]), module.split)
        levels[0] = (y0,) + levels[0][1:]
    return ThinModule(field, tuple(levels), split)


def normal_form(module: ThinModule) -> ThinIsoClass:
    """
    Orbit normal form: every nonzero level vector canonicalized leading-1.

    For modified modules z0 is first scaled to 1 (when nonzero), moving its
    value onto y0; if z0 = 0, y0 and the rest of level 0 are normalized
    separately.
    """
    field = module.field

    def canon(vector: Sequence[Scalar]) -> LevelVector:
        result = canonical_vector(field, vector)
        return tuple(vector) if result is None else result

    if not module.is_modified:
        return ThinIsoClass(ThinModule(field, tuple(canon(level) for level in module.levels)))

    split = module.split
    level0 = module.levels[0]
    if split != 0:
        level0 = canon((field.mul(level0[0], split),) + tuple(level0[1:]))
        split = field.one
    else:
        y0 = field.one if level0[0] != 0 else field.zero
        level0 = (y0,) + canon(level0[1:])
    levels = (level0,) + tuple(canon(level) for level in module.levels[1:])
    return ThinIsoClass(ThinModule(field, levels, split))


# Enumeration


def _relations_by_level(pres: QuiverPresentation) -> Dict[int, List[PathCombo]]:
    """Relations keyed by the highest level any of their arrows sits on."""
    grouped: Dict[int, List[PathCombo]] = {}
    for combo in pres.relations:
        top = 0
        for label in combo.labels():
            if label.startswith("x"):
                top = max(top, int(label.split("^")[1]))
        grouped.setdefault(top, []).append(combo)
    return grouped


def _search_levels(
    field: FieldSpec,
    pres: QuiverPresentation,
    choices: Sequence[Sequence[LevelVector]],
    split: Optional[Scalar] = None,
) -> List[ThinModule]:
    """Backtrack over one choice list per level, pruning by relations."""
    grouped = _relations_by_level(pres)
    d = len(choices)
    found: List[ThinModule] = []
    levels: List[LevelVector] = []

    def partial_ok(level: int) -> bool:
        combos = grouped.get(level, [])
        if not combos:
            return True
        scalars = _level_scalars(levels, split)
        return all(relation_value(c, scalars, field) == 0 for c in combos)

    def visit(level: int) -> None:
        if level == d:
            found.append(ThinModule(field, tuple(levels), split))
            return
        for vector in choices[level]:
            levels.append(vector)
            if partial_ok(level):
                visit(level + 1)
            levels.pop()

    visit(0)
    return found


def _assert_collinear(module: ThinModule) -> None:
    iso = ThinIsoClass(module)
    if iso.point() is None:
        raise InconsistencyError(
            f"commuting thin module with non-proportional levels: {module.to_json()}"
        )


def enumerate_thin_moduli(
    spec: ProblemSpec,
    q: int,
    budget: Optional[int] = None,
    check_collinearity: bool = True,
) -> List[ThinIsoClass]:
    """
    Isomorphism classes of thin sincere indecomposable modules over B(n,d)/J.

    Each level ranges over P^n(F_q), which fixes the torus gauge and rules out
    zero levels; tuples failing a commutativity or lifted relation are pruned
    as soon as their highest level is chosen.

    Raises:
        EnumerationUnsupportedError: Over the rationals
        BudgetExceededError: If the estimated candidate count exceeds budget
        InconsistencyError: If a surviving tuple has non-proportional levels
    """
    spec = spec_over(spec, q)
    pres = bounded_algebra(spec, "all")
    lines = list(projective_points(q, spec.n + 1))
    # Commutativity forces each level onto the previous one
    estimate = len(lines) * (1 + (spec.d - 1) * len(lines))
    check_budget(f"thin moduli of B({spec.n},{spec.d})", estimate, budget)

    modules = _search_levels(spec.field, pres, [lines] * spec.d)
    classes = []
    for module in modules:
        if check_collinearity:
            _assert_collinear(module)
        classes.append(ThinIsoClass(module))

    log_enumeration_info(
        logger, f"thin moduli of B({spec.n},{spec.d})", q, estimate, len(classes)
    )
    return classes


@dataclass
class ModuliReport:
    """Result of matching moduli classes with the points of X."""

    q: int
    classes: List[ThinIsoClass]
    points: List[ProjPoint]
    matched: bool
    failures: List[str]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "classes": [c.to_json() for c in self.classes],
            "points": [p.to_json() for p in self.points],
            "matched": self.matched,
            "failures": self.failures,
        }


def moduli_variety_bijection(
    spec: ProblemSpec,
    q: int,
    budget: Optional[int] = None,
    check_collinearity: bool = True,
) -> ModuliReport:
    """Map every class to its common level point and check it is a bijection onto X(F_q)."""
    spec = spec_over(spec, q)
    classes = enumerate_thin_moduli(spec, q, budget, check_collinearity)
    variety = variety_points(spec, budget)
    variety_set = set(variety)

    failures = []
    images = []
    for iso in classes:
        point = iso.point()
        if point is None:
            failures.append(f"class {iso.to_json()} has no common level point")
            continue
        if point not in variety_set:
            failures.append(f"class {iso.to_json()} maps to {point}, not on X")
        images.append(point)

    if len(set(images)) != len(images):
        failures.append("two classes map to the same point")
    if set(images) != variety_set:
        failures.append(f"{len(variety_set - set(images))} points of X are not hit")

    return ModuliReport(q, classes, images, not failures, failures)


def uniserial_chart(
    spec: ProblemSpec, q: int, budget: Optional[int] = None
) -> List[ThinIsoClass]:
    """
    Uniserial thin sincere modules over the modified bounded algebra.

    Uniserial means the composite y0 z0 is nonzero; the normal form has
    z0 = y0 = 1, so level 0 is (1, a_1, ..., a_n) and the class is the chart
    point with a_0 = 1.
    """
    spec = spec_over(spec, q)
    pres = modify_presentation(bounded_algebra(spec, "all"))
    chart = [(1,) + tail for tail in affine_points(q, spec.n)]
    lines = list(projective_points(q, spec.n + 1))
    estimate = len(chart) * (1 + (spec.d - 1) * len(lines))
    check_budget(f"uniserial chart of B({spec.n},{spec.d})", estimate, budget)

    modules = _search_levels(spec.field, pres, [chart] + [lines] * (spec.d - 1), split=1)
    classes = [ThinIsoClass(m) for m in modules if is_indecomposable_thin(m)]
    log_enumeration_info(
        logger, f"uniserial chart of B({spec.n},{spec.d})", q, estimate, len(classes)
    )
    return classes


def enumerate_thin_modules(
    n: int,
    d: int,
    q: int,
    relations: Optional[QuiverPresentation] = None,
    budget: Optional[int] = None,
) -> List[ThinModule]:
    """
    Every thin module on B(n, d) over F_q, zero levels included.

    Args:
        relations: Presentation on B(n, d) whose relations are imposed
            (defaults to B(n, d) itself, i.e. commutativity only)
    """
    field = FieldSpec.prime(q)
    require_prime_field(field)
    pres = relations or beilinson_quiver(n, d, field)
    vectors = list(product(range(q), repeat=n + 1))
    check_budget(f"thin modules on B({n},{d})", len(vectors) ** d, budget)
    return _search_levels(field, pres, [vectors] * d)
