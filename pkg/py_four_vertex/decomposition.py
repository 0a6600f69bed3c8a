"""
Cutting a polygon along a diagonal, the inequalities relating the extremal counts of a
polygon to those of its two parts, and the inductive four-vertex certificate built
from them.
"""
from typing import Dict, List, NamedTuple, Optional, Tuple

import logging

from .components import Polygon
from .exceptions import (
    AdjacentEndpointsError,
    CertificateViolationError,
    PartTooSmallError,
    RecursionBaseViolatedError,
)
from .extremality import (
    Extremality,
    count_labels,
    global_labels,
    local_labels,
    require_convex,
    require_generic,
)
from .triangulation import (
    EdgeKind,
    anti_delaunay,
    balanced_diagonal,
    delaunay,
    edge_kind,
)

logger = logging.getLogger("FourVertex")

MIN_PART_SIZE = 4

# Quantities tracked through a decomposition
S_MINUS = "s_minus"
S_PLUS = "s_plus"
L_MINUS = "l_minus"
L_PLUS = "l_plus"


class Decomposition:
    """
    A polygon cut along the diagonal (a, b) into two parts which share that diagonal
    as an edge.

    part1 runs from a to b and part2 from b back round to a, both in the parent's
    order. Each part's `parent_indices` give the parent index of each of its vertices.

    Attributes:
        parent (Polygon): The polygon being cut.
        diagonal (tuple[int, int]): The diagonal (a, b).
        part1 (Polygon): The vertices a, a+1, ..., b.
        part2 (Polygon): The vertices b, b+1, ..., a.
    """

    parent: Polygon
    diagonal: Tuple[int, int]
    part1: Polygon
    part2: Polygon

    def __init__(self, parent: Polygon, diagonal: Tuple[int, int]):
        self.parent = parent
        self.diagonal = diagonal
        a, b = diagonal
        n = parent.n
        self.part1 = parent.sub_polygon([(a + k) % n for k in range((b - a) % n + 1)])
        self.part2 = parent.sub_polygon([(b + k) % n for k in range((a - b) % n + 1)])

    @property
    def parts(self) -> Tuple[Polygon, Polygon]:
        return (self.part1, self.part2)

    def __repr__(self) -> str:
        return (
            f"<Decomposition diagonal={self.diagonal}, "
            f"parts=({self.part1.n}, {self.part2.n})>"
        )


def decompose(
    polygon: Polygon, a: int, b: int, require_convex_input: bool = True
) -> Decomposition:
    """
    Cuts the polygon along the diagonal (a, b).

    Args:
        polygon (Polygon): The polygon.
        a (int): The first endpoint.
        b (int): The second endpoint.
        require_convex_input (bool, optional): Whether to check that the polygon is
            convex, which makes every diagonal interior. Default: True.

    Raises:
        NotConvexError: If require_convex_input and the polygon is not convex.
        AdjacentEndpointsError: If a and b are equal or adjacent.
        PartTooSmallError: If a part would have fewer than four vertices.

    Returns:
        Decomposition: The two parts.
    """
    if require_convex_input:
        require_convex(polygon)
    a, b = polygon.index(a), polygon.index(b)
    if a == b or polygon.is_adjacent(a, b):
        raise AdjacentEndpointsError(
            f"({a}, {b}) is not a diagonal, its endpoints are adjacent or equal",
            witness=(a, b),
        )
    sizes = ((b - a) % polygon.n + 1, (a - b) % polygon.n + 1)
    if min(sizes) < MIN_PART_SIZE:
        raise PartTooSmallError(
            f"Cutting along ({a}, {b}) leaves parts with {sizes[0]} and {sizes[1]} "
            f"vertices, both need at least {MIN_PART_SIZE}",
            witness=(a, b),
        )
    return Decomposition(polygon, (a, b))


def extremal_counts(polygon: Polygon) -> Dict[str, int]:
    """
    The numbers of global and local maxima (minus) and minima (plus) of the polygon.
    """
    global_ = global_labels(polygon)
    local = local_labels(polygon)
    return {
        S_MINUS: count_labels(global_, Extremality.MAX),
        S_PLUS: count_labels(global_, Extremality.MIN),
        L_MINUS: count_labels(local, Extremality.MAX),
        L_PLUS: count_labels(local, Extremality.MIN),
    }


class InequalityRecord(NamedTuple):
    """
    One instance of an inequality count(P) >= count(P1) + count(P2) - offset.

    Attributes:
        name (str): Which inequality this is.
        quantity (str): The count it bounds, e.g. "s_minus".
        lhs (int): count(P).
        rhs (int): count(P1) + count(P2) - offset.
        slack (int): lhs - rhs.
        holds (bool): Whether slack >= 0.
        applicable (bool): Whether the inequality's preconditions are met, so that a
            failure would be a genuine counterexample.
    """

    name: str
    quantity: str
    lhs: int
    rhs: int
    slack: int
    holds: bool
    applicable: bool

    def to_dict(self) -> Dict:
        return self._asdict()


def _record(
    name: str,
    quantity: str,
    counts: Tuple[Dict[str, int], Dict[str, int], Dict[str, int]],
    offset: int,
    applicable: bool,
) -> InequalityRecord:
    whole, first, second = counts
    lhs = whole[quantity]
    rhs = first[quantity] + second[quantity] - offset
    return InequalityRecord(
        name=name,
        quantity=quantity,
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        holds=lhs >= rhs,
        applicable=applicable,
    )


class InequalityReport:
    """
    The inequalities evaluated on one decomposition.

    Inequalities:
        hexagon-cut: s(P) >= s(P1) + s(P2) - 2, for hexagons, for both s_minus and
            s_plus.
        cut: s(P) >= s(P1) + s(P2) - 3, for both s_minus and s_plus.
        delaunay-cut: s_minus(P) >= s_minus(P1) + s_minus(P2) - 2, when the diagonal
            is a Delaunay edge.
        anti-delaunay-cut: s_plus(P) >= s_plus(P1) + s_plus(P2) - 2, when the diagonal
            is an anti-Delaunay edge.
        local-cut: l_minus(P) >= l_minus(P1) + l_minus(P2) - 2.

    Attributes:
        diagonal (tuple[int, int]): The diagonal.
        kind (EdgeKind, optional): The diagonal's edge kind, None for non-convex
            parents.
        counts (dict): The extremal counts of the parent.
        part_counts (tuple[dict, dict]): The extremal counts of the two parts.
        records (list[InequalityRecord]): The evaluated inequalities.
    """

    diagonal: Tuple[int, int]
    kind: Optional[EdgeKind]
    counts: Dict[str, int]
    part_counts: Tuple[Dict[str, int], Dict[str, int]]
    records: List[InequalityRecord]

    def __init__(
        self,
        diagonal: Tuple[int, int],
        kind: Optional[EdgeKind],
        counts: Dict[str, int],
        part_counts: Tuple[Dict[str, int], Dict[str, int]],
        records: List[InequalityRecord],
    ):
        self.diagonal = diagonal
        self.kind = kind
        self.counts = counts
        self.part_counts = part_counts
        self.records = records

    def record(self, name: str, quantity: str) -> Optional[InequalityRecord]:
        for record in self.records:
            if record.name == name and record.quantity == quantity:
                return record
        return None

    @property
    def holds(self) -> bool:
        """
        Whether every applicable inequality holds.
        """
        return all(record.holds for record in self.records if record.applicable)

    def naive_sum_holds(self, quantity: str) -> bool:
        """
        Whether count(P) <= count(P1) + count(P2), which can fail.
        """
        first, second = self.part_counts
        return self.counts[quantity] <= first[quantity] + second[quantity]

    def to_dict(self) -> Dict:
        return {
            "diagonal": list(self.diagonal),
            "edge_kind": self.kind.name if self.kind is not None else None,
            "counts": self.counts,
            "part_counts": list(self.part_counts),
            "records": [record.to_dict() for record in self.records],
            "holds": self.holds,
        }

    def __repr__(self) -> str:
        return f"<InequalityReport diagonal={self.diagonal}, holds={self.holds}>"


def verify_inequalities(decomposition: Decomposition) -> InequalityReport:
    """
    Evaluates every inequality which applies to the decomposition.

    The parent must be generic. The inequalities only apply to convex parents, but
    they are still evaluated (with applicable=False) for non-convex ones, and the
    Delaunay inequalities are skipped for them.

    Raises:
        NotGenericError: If the parent is not generic.
    """
    parent = decomposition.parent
    require_generic(parent)
    convex = parent.is_convex()
    if convex:
        for part in decomposition.parts:
            assert part.is_convex() and part.predicates.generic

    counts = (
        extremal_counts(parent),
        extremal_counts(decomposition.part1),
        extremal_counts(decomposition.part2),
    )
    records = []
    if parent.n == 6:
        records.append(_record("hexagon-cut", S_MINUS, counts, 2, convex))
        records.append(_record("hexagon-cut", S_PLUS, counts, 2, convex))
    records.append(_record("cut", S_MINUS, counts, 3, convex))
    records.append(_record("cut", S_PLUS, counts, 3, convex))

    kind = None
    if convex:
        kind = edge_kind(parent, *decomposition.diagonal)
        if kind == EdgeKind.DELAUNAY:
            records.append(_record("delaunay-cut", S_MINUS, counts, 2, True))
        elif kind == EdgeKind.ANTI_DELAUNAY:
            records.append(_record("anti-delaunay-cut", S_PLUS, counts, 2, True))
    records.append(_record("local-cut", L_MINUS, counts, 2, convex))

    report = InequalityReport(
        diagonal=decomposition.diagonal,
        kind=kind,
        counts=counts[0],
        part_counts=(counts[1], counts[2]),
        records=records,
    )
    for record in records:
        if record.applicable and not record.holds:
            logger.warning(
                f"{record.name} fails for {record.quantity} on diagonal "
                f"{decomposition.diagonal} of {parent}: {record.lhs} < {record.rhs}"
            )
    return report


class AuditSummary(NamedTuple):
    """
    The reports for every diagonal, with the smallest slack of each inequality.
    """

    reports: List[InequalityReport]
    worst_slack: Dict[Tuple[str, str], int]

    @property
    def holds(self) -> bool:
        return all(report.holds for report in self.reports)


def audit_all_diagonals(
    polygon: Polygon, require_convex_input: bool = True
) -> AuditSummary:
    """
    Runs `verify_inequalities` on every diagonal leaving at least four vertices on
    each side.

    Raises:
        NotConvexError: If require_convex_input and the polygon is not convex.
        NotGenericError: If the polygon is not generic.
    """
    if require_convex_input:
        require_convex(polygon)
    require_generic(polygon)

    reports = []
    worst: Dict[Tuple[str, str], int] = {}
    n = polygon.n
    for a in range(n):
        for b in range(a + MIN_PART_SIZE - 1, n):
            if n - (b - a) + 1 < MIN_PART_SIZE:
                continue
            report = verify_inequalities(
                decompose(polygon, a, b, require_convex_input=False)
            )
            reports.append(report)
            for record in report.records:
                key = (record.name, record.quantity)
                worst[key] = min(worst.get(key, record.slack), record.slack)
    return AuditSummary(reports, worst)


class ProofStep(NamedTuple):
    """
    One step of an inductive certificate.

    Attributes:
        depth (int): How many cuts above this polygon.
        vertices (tuple[int]): The vertices of this polygon, as indices of the root.
        quantity (str): The count being bounded.
        rule (str): "quadrilateral" or "pentagon" for base cases, otherwise the
            inequality used to combine the parts.
        diagonal (tuple[int, int], optional): The cut, in root indices.
        lower_bound (int): The bound proved for the count.
        measured (int): The count computed directly.
    """

    depth: int
    vertices: Tuple[int, ...]
    quantity: str
    rule: str
    diagonal: Optional[Tuple[int, int]]
    lower_bound: int
    measured: int


class ProofTrace(NamedTuple):
    quantity: str
    lower_bound: int
    depth: int
    steps: List[ProofStep]


class FourVertexCertificate(NamedTuple):
    """
    Certificates that s_plus + s_minus >= 4 and l_plus + l_minus >= 4.

    The local bound follows from l_minus >= 2, since local maxima and minima alternate
    on a convex polygon.
    """

    s_minus: ProofTrace
    s_plus: ProofTrace
    l_minus: ProofTrace

    @property
    def s_bound(self) -> int:
        return self.s_minus.lower_bound + self.s_plus.lower_bound

    @property
    def l_bound(self) -> int:
        return 2 * self.l_minus.lower_bound

    @property
    def depth(self) -> int:
        return max(self.s_minus.depth, self.s_plus.depth, self.l_minus.depth)


def _measure(polygon: Polygon, quantity: str) -> int:
    if quantity in (S_MINUS, S_PLUS):
        labels = global_labels(polygon)
        return count_labels(
            labels, Extremality.MAX if quantity == S_MINUS else Extremality.MIN
        )
    return count_labels(local_labels(polygon), Extremality.MAX)


def _cut_for(polygon: Polygon, quantity: str) -> Tuple[Tuple[int, int], str]:
    if polygon.n == 6:
        return (0, 3), "hexagon-cut"
    if quantity == S_PLUS:
        return balanced_diagonal(anti_delaunay(polygon)), "anti-delaunay-cut"
    if quantity == S_MINUS:
        return balanced_diagonal(delaunay(polygon)), "delaunay-cut"
    return balanced_diagonal(delaunay(polygon)), "local-cut"


def _prove(
    polygon: Polygon,
    quantity: str,
    vertices: Tuple[int, ...],
    depth: int,
    steps: List[ProofStep],
) -> Tuple[int, int]:
    """
    Returns (lower bound, depth of the deepest cut below) for the quantity on the
    polygon, appending the steps used.
    """
    measured = _measure(polygon, quantity)
    if polygon.n <= 5:
        rule = "quadrilateral" if polygon.n == 4 else "pentagon"
        if measured < 2 or (polygon.n == 4 and measured != 2):
            raise RecursionBaseViolatedError(
                f"{rule} {vertices} has {quantity}={measured}"
            )
        steps.append(ProofStep(depth, vertices, quantity, rule, None, 2, measured))
        return 2, 0

    diagonal, rule = _cut_for(polygon, quantity)
    decomposition = decompose(polygon, *diagonal, require_convex_input=False)
    bounds = []
    levels = []
    for part in decomposition.parts:
        part_vertices = tuple(vertices[index] for index in part.parent_indices)
        bound, level = _prove(part, quantity, part_vertices, depth + 1, steps)
        bounds.append(bound)
        levels.append(level)

    lower_bound = sum(bounds) - 2
    root_diagonal = (vertices[diagonal[0]], vertices[diagonal[1]])
    if measured < lower_bound:
        raise CertificateViolationError(
            f"{rule} on {root_diagonal} proves {quantity} >= {lower_bound} for "
            f"{vertices}, but it is {measured}"
        )
    steps.append(
        ProofStep(depth, vertices, quantity, rule, root_diagonal, lower_bound, measured)
    )
    logger.debug(f"{rule} on {root_diagonal}: {quantity} >= {lower_bound}")
    return lower_bound, max(levels) + 1


def prove_bound(polygon: Polygon, quantity: str) -> ProofTrace:
    """
    Proves that the quantity is at least 2 by cutting the polygon recursively down to
    quadrilaterals and pentagons.

    Hexagons are cut along a diagonal leaving four vertices on each side. Larger
    polygons are cut along a balanced diagonal of the Delaunay triangulation for
    s_minus and l_minus, or of the anti-Delaunay triangulation for s_plus.
    """
    steps: List[ProofStep] = []
    vertices = tuple(range(polygon.n))
    lower_bound, depth = _prove(polygon, quantity, vertices, 0, steps)
    return ProofTrace(quantity, lower_bound, depth, steps)


def four_vertex_via_decomposition(polygon: Polygon) -> FourVertexCertificate:
    """
    Builds inductive certificates that a generic convex polygon has at least four
    global extrema and at least four local extrema.

    Raises:
        NotConvexError: If the polygon is not convex.
        NotGenericError: If the polygon is not generic.
        PartTooSmallError: If the polygon has fewer than six vertices.
        CertificateViolationError: If a combining inequality fails (which would
            disprove the inequality).
        RecursionBaseViolatedError: If a base case has the wrong count.
    """
    require_generic(polygon)
    require_convex(polygon)
    if polygon.n < 6:
        raise PartTooSmallError(
            f"The decomposition certificate needs at least 6 vertices, got {polygon.n}"
        )
    certificate = FourVertexCertificate(
        s_minus=prove_bound(polygon, S_MINUS),
        s_plus=prove_bound(polygon, S_PLUS),
        l_minus=prove_bound(polygon, L_MINUS),
    )
    if certificate.s_bound < 4 or certificate.l_bound < 4:
        raise CertificateViolationError(
            f"Certificate for {polygon} only proves s >= {certificate.s_bound} and "
            f"l >= {certificate.l_bound}"
        )
    return certificate
