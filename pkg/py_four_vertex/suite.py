"""
The property suite: every invariant of the toolkit, checked over generated polygons
and the corpus, reported per tag.
"""
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

import itertools
import logging
import math

import numpy as np

from . import predicates
from .components import Polygon
from .corpus import check_fixture, corpus
from .decomposition import (
    AuditSummary,
    audit_all_diagonals,
    decompose,
    four_vertex_via_decomposition,
)
from .evolute import (
    CuspFlag,
    cusp_flags,
    evolute,
    verify_evolute_identity,
    winding_number,
)
from .exceptions import (
    CertificateViolationError,
    FourVertexError,
    NoBalancedDiagonalError,
    PreconditionError,
    UnknownTagError,
)
from .extremality import (
    Containment,
    Extremality,
    bose_counts,
    classify_circle,
    count_labels,
    global_labels,
    local_labels,
    radial_labels,
    remove_vertex,
)
from .generators import GeneratorKind, default_seed, generate_many
from .predicates import TAU, halfplane_exchange
from .triangulation import (
    EdgeKind,
    anti_delaunay,
    balanced_diagonal,
    delaunay,
    edge_kind,
    enumerate_triangulations,
    has_empty_circle,
    has_full_circle,
    random_triangulation,
)

logger = logging.getLogger("FourVertex")

MAX_COUNTEREXAMPLES = 5
FLOAT_TOLERANCE = 1e-9
EDGE_KIND_MAX_N = 9
SAMPLE_VERTICES = 6

# Populations a tag can run over
CONVEX = "convex"
COHERENT = "coherent"
SIMPLE = "simple"
ALL = "all"
ONCE = "once"


class SuiteConfig(NamedTuple):
    """
    Attributes:
        n_range (tuple[int, int]): Inclusive range of generated polygon sizes.
        count (int): How many polygons of each generated kind.
        seed (int, optional): Base seed, defaults to `default_seed()`.
        include_corpus (bool): Whether to add the corpus polygons. Default: True.
    """

    n_range: Tuple[int, int] = (4, 12)
    count: int = 50
    seed: Optional[int] = None
    include_corpus: bool = True


class Counterexample(NamedTuple):
    tag: str
    name: str
    message: str
    vertices: Optional[List[List[str]]]

    def to_dict(self) -> Dict:
        return self._asdict()


class TagResult:
    """
    The outcome of one tag: how many cases passed, failed or were skipped because
    their preconditions did not hold, and the first few counterexamples.
    """

    tag: str
    passed: int
    failed: int
    skipped: int
    counterexamples: List[Counterexample]

    def __init__(self, tag: str):
        self.tag = tag
        self.passed = 0
        self.failed = 0
        self.skipped = 0
        self.counterexamples = []

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "ok": self.ok,
            "counterexamples": [
                counterexample.to_dict() for counterexample in self.counterexamples
            ],
        }

    def __repr__(self) -> str:
        return (
            f"<TagResult tag={self.tag}, passed={self.passed}, failed={self.failed}, "
            f"skipped={self.skipped}>"
        )


class SuiteReport:
    def __init__(self, config: SuiteConfig, results: Dict[str, TagResult]):
        self.config = config
        self.results = results

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.results.values())

    @property
    def failed_tags(self) -> List[str]:
        return [tag for tag, result in sorted(self.results.items()) if not result.ok]

    def to_dict(self) -> Dict:
        return {
            "config": {
                "n_range": list(self.config.n_range),
                "count": self.config.count,
                "seed": self.config.seed,
                "include_corpus": self.config.include_corpus,
            },
            "ok": self.ok,
            "tags": {
                tag: self.results[tag].to_dict() for tag in sorted(self.results)
            },
        }

    def __repr__(self) -> str:
        return f"<SuiteReport tags={len(self.results)}, ok={self.ok}>"


class SuiteContext:
    """
    Shared state for one suite run: the random generator for tags which need one, and
    caches of expensive per-polygon results.
    """

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self.__audits: Dict[Polygon, AuditSummary] = {}

    def audit(self, polygon: Polygon) -> AuditSummary:
        if polygon not in self.__audits:
            self.__audits[polygon] = audit_all_diagonals(polygon)
        return self.__audits[polygon]


# A check returns None when the case passes and a failure message otherwise. Raising
# a PreconditionError skips the case, any other FourVertexError fails it.
Check = Callable[[Optional[Polygon], SuiteContext], Optional[str]]


class Tag(NamedTuple):
    name: str
    population: str
    check: Check
    min_n: int = 4


def _counts(labels) -> Tuple[int, int]:
    return count_labels(labels, Extremality.MAX), count_labels(labels, Extremality.MIN)


def check_bose_identities(polygon, context):
    counts = bose_counts(polygon)
    if counts.difference_residuals() != (0, 0) or counts.sum_residuals(polygon.n) != (
        0,
        0,
    ):
        return f"Circle counts {counts} break the identities for n={polygon.n}"
    return None


def check_four_vertex_global(polygon, context):
    maxima, minima = _counts(global_labels(polygon))
    if maxima + minima < 4:
        return f"Only {maxima} global maxima and {minima} global minima"
    return None


def check_four_vertex_local(polygon, context):
    maxima, minima = _counts(local_labels(polygon))
    if maxima + minima < 4:
        return f"Only {maxima} local maxima and {minima} local minima"
    return None


def check_four_vertex_radial(polygon, context):
    maxima, minima = _counts(radial_labels(polygon))
    if maxima + minima < 4:
        return f"Only {maxima} radial maxima and {minima} radial minima"
    return None


def check_local_equals_radial(polygon, context):
    local = local_labels(polygon)
    radial = [label.opposite for label in radial_labels(polygon)]
    for index, (first, second) in enumerate(zip(local, radial)):
        if first != second:
            return f"Vertex {index} is locally {first} but radially {second}"
    return None


def check_global_implies_local(polygon, context):
    for index, (global_, local) in enumerate(
        zip(global_labels(polygon), local_labels(polygon))
    ):
        if global_ != Extremality.NONE and global_ != local:
            return f"Vertex {index} is globally {global_} but locally {local}"
    return None


def check_vertex_removal_global(polygon, context):
    labels = global_labels(polygon)
    maxima, minima = _counts(labels)
    for index, label in enumerate(labels):
        if label == Extremality.NONE:
            continue
        removed_maxima, removed_minima = _counts(
            global_labels(remove_vertex(polygon, index))
        )
        change = (
            maxima - removed_maxima
            if label == Extremality.MAX
            else minima - removed_minima
        )
        if change not in (0, 1):
            return f"Removing vertex {index} ({label}) changed its count by {change}"
    return None


def check_vertex_removal_local(polygon, context):
    labels = local_labels(polygon)
    maxima = count_labels(labels, Extremality.MAX)
    for index, label in enumerate(labels):
        if label != Extremality.MAX:
            continue
        smaller = remove_vertex(polygon, index)
        smaller_labels = local_labels(smaller)
        removed = count_labels(smaller_labels, Extremality.MAX)
        if maxima < removed - 1:
            return (
                f"Removing local maximum {index} leaves {removed} local maxima, "
                f"more than one above the {maxima} of the polygon"
            )
        # A local maximum at V_{i-2} or V_{i+2} after the removal was one before
        for offset in (-2, 2):
            other = (index + offset) % polygon.n
            position = smaller.parent_indices.index(other)
            if (
                smaller_labels[position] == Extremality.MAX
                and labels[other] != Extremality.MAX
            ):
                return (
                    f"Vertex {other} is a local maximum after removing vertex "
                    f"{index}, but not before"
                )
    return None


def check_extremes_balanced(polygon, context):
    maxima, minima = _counts(local_labels(polygon))
    if maxima != minima:
        return f"{maxima} local maxima but {minima} local minima"
    return None


def check_maximal_exists(polygon, context):
    global_maxima, global_minima = _counts(global_labels(polygon))
    local_maxima, local_minima = _counts(local_labels(polygon))
    if min(global_maxima, global_minima, local_maxima, local_minima) < 1:
        return (
            f"Missing an extremum: global ({global_maxima}, {global_minima}), "
            f"local ({local_maxima}, {local_minima})"
        )
    return None


def check_evolute_identity(polygon, context):
    identity = verify_evolute_identity(polygon)
    if not identity.holds:
        return (
            f"N+={identity.n_plus}, N-={identity.n_minus}, "
            f"wind(P)={identity.wind_p.value}, wind(E)={identity.wind_e.value}"
        )
    if max(identity.wind_p.residual, identity.wind_e.residual) >= 1e-6:
        return f"Winding residuals too large: {identity.wind_p}, {identity.wind_e}"
    return None


def check_cusp_agreement(polygon, context):
    if not polygon.predicates.generic:
        raise PreconditionError("Polygon is not generic")
    flags = cusp_flags(polygon, strict=False)
    for index, (flag, label) in enumerate(zip(flags, local_labels(polygon))):
        if flag is None:
            return f"Angle difference at vertex {index} is unclassifiable"
        if (flag == CuspFlag.CUSP) != (label != Extremality.NONE):
            return f"Vertex {index} is locally {label} but its center is {flag}"
    return None


def check_winding_simple(polygon, context):
    winding = winding_number(polygon)
    if winding.value != 1 or abs(winding.raw - TAU) >= FLOAT_TOLERANCE:
        return f"Winding number {winding} of a simple polygon"
    return None


def check_angle_sum(polygon, context):
    total = math.fsum(polygon.left_angle(index) for index in range(polygon.n))
    if abs(total - (polygon.n - 2) * math.pi) >= FLOAT_TOLERANCE * polygon.n:
        return f"Angles add up to {total}, not {polygon.n - 2} pi"
    return None


def check_wind_reversal(polygon, context):
    forward = winding_number(polygon)
    backward = winding_number(polygon.reversed())
    if backward.value != -forward.value or abs(forward.raw + backward.raw) >= (
        FLOAT_TOLERANCE
    ):
        return f"Reversal gives {backward}, expected the negation of {forward}"
    return None


def check_evolute_equidistant(polygon, context):
    index = evolute(polygon).equidistance_witness(polygon)
    if index is not None:
        return f"O_{index} is not equidistant from its three vertices"
    return None


def _sample_quadruples(polygon: Polygon):
    vertices = polygon.lattice[:SAMPLE_VERTICES]
    return itertools.permutations(range(len(vertices)), 4), vertices


def check_incircle_permutation(polygon, context):
    quadruples, points = _sample_quadruples(polygon)
    for a, b, c, q in quadruples:
        if a > b or b > c:
            continue
        results = {
            predicates.in_circle(*(points[i] for i in order), points[q])
            for order in itertools.permutations((a, b, c))
        }
        if len(results) != 1:
            return f"in_circle depends on the order of {(a, b, c)} for {q}"
    return None


def check_halfplane_exchange(polygon, context):
    quadruples, points = _sample_quadruples(polygon)
    for a, b, c, x in quadruples:
        clauses = halfplane_exchange(points[a], points[b], points[c], points[x])
        if not clauses.all_hold():
            return f"Exchange clauses {clauses} fail for {(a, b, c, x)}"
    return None


def check_triangulation_unique(polygon, context):
    expected = (delaunay(polygon), anti_delaunay(polygon))
    for _ in range(3):
        shuffled = (
            delaunay(polygon, rng=context.rng),
            anti_delaunay(polygon, rng=context.rng),
        )
        if shuffled != expected:
            return f"Flip order changed the triangulations: {shuffled} != {expected}"
    return None


def check_triangulation_circles(polygon, context):
    for triangulation, wanted in (
        (delaunay(polygon), Containment.EMPTY),
        (anti_delaunay(polygon), Containment.FULL),
    ):
        for triangle in sorted(triangulation.triangles):
            containment = classify_circle(polygon, *triangle).containment
            if containment != wanted:
                return f"Triangle {triangle} has a {containment} circle, not {wanted}"
    return None


def check_empty_circle_count(polygon, context):
    counts = bose_counts(polygon)
    empty = counts.s_minus + counts.t_minus + counts.u_minus
    full = counts.s_plus + counts.t_plus + counts.u_plus
    triangles = (
        len(delaunay(polygon).triangles),
        len(anti_delaunay(polygon).triangles),
    )
    if (empty, full) != triangles or empty != polygon.n - 2:
        return (
            f"{empty} empty and {full} full circles, triangulations have {triangles} "
            "triangles"
        )
    return None


def check_edge_kind_equivalence(polygon, context):
    if polygon.n > EDGE_KIND_MAX_N:
        raise PreconditionError(f"Brute force is limited to n <= {EDGE_KIND_MAX_N}")
    for i, j in itertools.combinations(range(polygon.n), 2):
        kind = edge_kind(polygon, i, j)
        if polygon.is_adjacent(i, j):
            continue
        if kind == EdgeKind.BOTH:
            return f"Diagonal {(i, j)} is both Delaunay and anti-Delaunay"
        if (kind == EdgeKind.DELAUNAY) != has_empty_circle(polygon, i, j):
            return f"Diagonal {(i, j)} is {kind} but the empty circle search disagrees"
        if (kind == EdgeKind.ANTI_DELAUNAY) != has_full_circle(polygon, i, j):
            return f"Diagonal {(i, j)} is {kind} but the full circle search disagrees"
    return None


def check_balanced_diagonal(polygon, context):
    triangulations = [
        triangulation
        for n in (7, 8)
        for triangulation in enumerate_triangulations(n)
    ]
    triangulations.extend(
        random_triangulation(int(n), context.rng)
        for n in context.rng.integers(9, 15, size=context.config.count)
    )
    for triangulation in triangulations:
        try:
            balanced_diagonal(triangulation)
        except NoBalancedDiagonalError:
            return f"{triangulation} has no balanced diagonal"
    return None


def check_corpus_fixtures(polygon, context):
    if not context.config.include_corpus:
        raise PreconditionError("The corpus is excluded")
    for entry in corpus():
        mismatches = check_fixture(entry)
        if mismatches:
            return f"Pinned values of {entry.id} do not match: {mismatches}"
    return None


def _record_check(name: str) -> Check:
    def check(polygon, context):
        records = [
            (report.diagonal, record)
            for report in context.audit(polygon).reports
            for record in report.records
            if record.name == name
        ]
        if not records:
            raise PreconditionError(f"No diagonal of this polygon has {name} records")
        for diagonal, record in records:
            if not record.holds:
                return (
                    f"{name} fails for {record.quantity} on diagonal {diagonal}: "
                    f"{record.lhs} < {record.rhs}"
                )
        return None

    return check


def check_decomposition_persistence(polygon, context):
    labels = global_labels(polygon)
    for report in context.audit(polygon).reports:
        decomposition = decompose(polygon, *report.diagonal)
        for part in decomposition.parts:
            part_labels = global_labels(part)
            for index, parent_index in enumerate(part.parent_indices):
                if parent_index in decomposition.diagonal:
                    continue
                label = labels[parent_index]
                if label != Extremality.NONE and part_labels[index] != label:
                    return (
                        f"Vertex {parent_index} is globally {label} but "
                        f"{part_labels[index]} after cutting along "
                        f"{decomposition.diagonal}"
                    )
    return None


def check_decomposition_proof(polygon, context):
    try:
        certificate = four_vertex_via_decomposition(polygon)
    except CertificateViolationError as err:
        return str(err)
    if certificate.s_bound < 4 or certificate.l_bound < 4:
        return f"Certificate only proves {certificate.s_bound}, {certificate.l_bound}"
    return None


TAGS: Dict[str, Tag] = {
    tag.name: tag
    for tag in [
        Tag("bose-identities", CONVEX, check_bose_identities),
        Tag("four-vertex-global", CONVEX, check_four_vertex_global),
        Tag("four-vertex-local", CONVEX, check_four_vertex_local),
        Tag("four-vertex-radial", COHERENT, check_four_vertex_radial),
        Tag("local-equals-radial", COHERENT, check_local_equals_radial),
        Tag("global-implies-local", CONVEX, check_global_implies_local),
        Tag("vertex-removal-global", CONVEX, check_vertex_removal_global, min_n=5),
        Tag("vertex-removal-local", CONVEX, check_vertex_removal_local, min_n=5),
        Tag("extremes-balanced", CONVEX, check_extremes_balanced),
        Tag("maximal-exists", CONVEX, check_maximal_exists),
        Tag("evolute-identity", SIMPLE, check_evolute_identity),
        Tag("cusp-agreement", SIMPLE, check_cusp_agreement),
        Tag("winding-simple", SIMPLE, check_winding_simple, min_n=3),
        Tag("angle-sum", SIMPLE, check_angle_sum, min_n=3),
        Tag("wind-reversal", SIMPLE, check_wind_reversal, min_n=3),
        Tag("evolute-equidistant", ALL, check_evolute_equidistant, min_n=3),
        Tag("incircle-permutation", ALL, check_incircle_permutation),
        Tag("halfplane-exchange", CONVEX, check_halfplane_exchange),
        Tag("triangulation-unique", CONVEX, check_triangulation_unique),
        Tag("triangulation-circles", CONVEX, check_triangulation_circles),
        Tag("empty-circle-count", CONVEX, check_empty_circle_count),
        Tag("edge-kind-equivalence", CONVEX, check_edge_kind_equivalence),
        Tag("balanced-diagonal", ONCE, check_balanced_diagonal),
        Tag("corpus-fixtures", ONCE, check_corpus_fixtures),
        Tag("decomposition-hexagon", CONVEX, _record_check("hexagon-cut"), min_n=6),
        Tag("decomposition-cut", CONVEX, _record_check("cut"), min_n=6),
        Tag("decomposition-delaunay", CONVEX, _record_check("delaunay-cut"), min_n=6),
        Tag(
            "decomposition-anti-delaunay",
            CONVEX,
            _record_check("anti-delaunay-cut"),
            min_n=6,
        ),
        Tag("decomposition-local", CONVEX, _record_check("local-cut"), min_n=6),
        Tag(
            "decomposition-persistence",
            CONVEX,
            check_decomposition_persistence,
            min_n=6,
        ),
        Tag("decomposition-proof", CONVEX, check_decomposition_proof, min_n=6),
    ]
}


Case = Tuple[str, Optional[Polygon]]


class Populations:
    """
    The polygons each tag runs over, generated on first use.
    """

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.__cache: Dict[str, List[Case]] = {}

    def _draws(self, kind: GeneratorKind, offset: int) -> List[Case]:
        low, high = self.config.n_range
        if kind == GeneratorKind.SIMPLE_NONCONVEX:
            low = max(low, 5)
        return [
            (f"{kind.value}-n{draw.n}-seed{draw.seed}", polygon)
            for draw, polygon in generate_many(
                kind, (low, high), self.config.count, self.config.seed + offset
            )
        ]

    def _corpus(self) -> List[Case]:
        if not self.config.include_corpus:
            return []
        return [(f"corpus:{entry.id}", entry.polygon()) for entry in corpus()]

    def _build(self, population: str) -> List[Case]:
        if population == CONVEX:
            return self._draws(GeneratorKind.CONVEX_GENERIC, 0) + [
                (name, polygon)
                for name, polygon in self._corpus()
                if polygon.is_convex() and polygon.predicates.generic
            ]
        if population == COHERENT:
            return self._draws(GeneratorKind.CONVEX_GENERIC_COHERENT, 1_000_000)
        if population == SIMPLE:
            nonconvex = self._draws(GeneratorKind.SIMPLE_NONCONVEX, 2_000_000)
            return self[CONVEX] + nonconvex + [
                (name, polygon)
                for name, polygon in self._corpus()
                if polygon.predicates.simple
                and not (polygon.is_convex() and polygon.predicates.generic)
            ]
        if population == ALL:
            return self[SIMPLE] + self[COHERENT] + [
                (name, polygon)
                for name, polygon in self._corpus()
                if not polygon.predicates.simple
            ]
        return [("once", None)]

    def __getitem__(self, population: str) -> List[Case]:
        if population not in self.__cache:
            self.__cache[population] = self._build(population)
        return self.__cache[population]


def _run_tag(
    tag: Tag,
    cases: Iterable[Case],
    context: SuiteContext,
) -> TagResult:
    result = TagResult(tag.name)
    for name, polygon in cases:
        if polygon is not None and polygon.n < tag.min_n:
            result.skipped += 1
            continue
        try:
            message = tag.check(polygon, context)
        except PreconditionError as err:
            logger.debug(f"{tag.name}: skipping {name}: {err}")
            result.skipped += 1
            continue
        except FourVertexError as err:
            message = f"{type(err).__name__}: {err}"
        if message is None:
            result.passed += 1
            continue
        result.failed += 1
        logger.warning(f"{tag.name} failed on {name}: {message}")
        if len(result.counterexamples) < MAX_COUNTEREXAMPLES:
            result.counterexamples.append(
                Counterexample(
                    tag.name,
                    name,
                    message,
                    polygon.describe() if polygon is not None else None,
                )
            )
    return result


def run_suite(
    tags: Optional[Iterable[str]] = None, config: Optional[SuiteConfig] = None
) -> SuiteReport:
    """
    Runs the selected tags (all of them by default) over generated polygons and the
    corpus.

    Cases whose preconditions fail are skipped, not failed. Failures never raise,
    even when a check hits another error of this package. They are counted, and the
    first few of each tag are kept as counterexamples with the polygon's coordinates.

    Args:
        tags (iterable[str], optional): The tags to run. Default: all of `TAGS`.
        config (SuiteConfig, optional): Sizes, counts and seed.

    Raises:
        UnknownTagError: If a tag is not in `TAGS`.

    Returns:
        SuiteReport: The per-tag results.
    """
    config = config or SuiteConfig()
    if config.seed is None:
        config = config._replace(seed=default_seed())
    selected = sorted(TAGS) if tags is None else sorted(set(tags))
    unknown = [tag for tag in selected if tag not in TAGS]
    if unknown:
        raise UnknownTagError(f"Unknown tags: {', '.join(unknown)}")

    populations = Populations(config)
    context = SuiteContext(config)
    results = {}
    for name in selected:
        tag = TAGS[name]
        results[name] = _run_tag(tag, populations[tag.population], context)
        logger.info(f"{name}: {results[name]}")
    return SuiteReport(config, results)
