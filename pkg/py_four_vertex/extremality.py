from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import logging
from enum import Enum, auto

from .components import Polygon
from .exceptions import (
    CollinearInputError,
    CollinearTripleError,
    DegenerateAngleError,
    NotConvexError,
    NotGenericError,
    OnCircleDegenerateError,
    OnCircleWitnessError,
    PreconditionError,
    RadiusTieError,
    TooFewVerticesError,
)
from .predicates import CirclePosition, Orientation, in_circle, orientation

logger = logging.getLogger("FourVertex")


class VertexSign(Enum):
    POSITIVE = auto()
    NEGATIVE = auto()


class CurvatureRelation(Enum):
    """
    The relation of V_i to V_{i+1}: GREATER means V_i has the greater curvature.
    """

    GREATER = auto()
    LESS = auto()


class CurvatureConvention(Enum):
    """
    How the curvature relation treats a negative vertex V_i.

    SWAP_BOTH swaps "greater" with "less" and "outside" with "inside", which gives the
    same rule as for a positive vertex. SWAP_RELATION only swaps the relation.
    """

    SWAP_BOTH = auto()
    SWAP_RELATION = auto()


class Extremality(Enum):
    MAX = auto()
    MIN = auto()
    NONE = auto()

    @property
    def opposite(self) -> "Extremality":
        return {
            Extremality.MAX: Extremality.MIN,
            Extremality.MIN: Extremality.MAX,
            Extremality.NONE: Extremality.NONE,
        }[self]


class Containment(Enum):
    EMPTY = auto()
    FULL = auto()
    MIXED = auto()


class Adjacency(Enum):
    NEIGHBORING = auto()
    INTERMEDIATE = auto()
    DISJOINT = auto()


class CircleClassification(NamedTuple):
    containment: Containment
    adjacency: Adjacency


class BoseCounts(NamedTuple):
    """
    Numbers of full (plus) and empty (minus) circles through vertex triples, split by
    adjacency: s for neighboring, t for disjoint and u for intermediate triples.
    """

    s_plus: int
    s_minus: int
    t_plus: int
    t_minus: int
    u_plus: int
    u_minus: int

    def difference_residuals(self) -> Tuple[int, int]:
        """
        (s+ - t+ - 2, s- - t- - 2), both zero for generic convex polygons.
        """
        return (
            self.s_plus - self.t_plus - 2,
            self.s_minus - self.t_minus - 2,
        )

    def sum_residuals(self, n: int) -> Tuple[int, int]:
        """
        (s+ + t+ + u+ - (n - 2), s- + t- + u- - (n - 2)), both zero for generic convex
        polygons.
        """
        return (
            self.s_plus + self.t_plus + self.u_plus - (n - 2),
            self.s_minus + self.t_minus + self.u_minus - (n - 2),
        )


Labels = List[Optional[Extremality]]


def vertex_sign(polygon: Polygon, index: int) -> VertexSign:
    """
    Whether the left angle at vertex i is at most pi (positive) or not (negative).

    Decided exactly with the orientation of (V_{i-1}, V_i, V_{i+1}).

    Raises:
        DegenerateAngleError: If the three vertices are collinear.
    """
    triple = polygon.triple(index)
    turn = orientation(*(polygon.lattice[j] for j in triple))
    if turn == Orientation.LEFT:
        return VertexSign.POSITIVE
    if turn == Orientation.RIGHT:
        return VertexSign.NEGATIVE
    raise DegenerateAngleError(
        f"Vertex {triple[1]} has no sign, vertices {triple} are collinear",
        witness=triple,
    )


def adjacency(n: int, i: int, j: int, k: int) -> Adjacency:
    """
    Classifies a triple of vertex indices of an n-gon by how many of its pairs are
    cyclically adjacent.
    """
    pairs = [(i, j), (j, k), (i, k)]
    adjacent = sum(1 for a, b in pairs if (a - b) % n in (1, n - 1))
    if adjacent >= 2:
        return Adjacency.NEIGHBORING
    if adjacent == 1:
        return Adjacency.INTERMEDIATE
    return Adjacency.DISJOINT


def _neighbouring_position(polygon: Polygon, index: int, other: int) -> CirclePosition:
    triple = polygon.triple(index)
    try:
        return in_circle(
            *(polygon.lattice[j] for j in triple), polygon.lattice_point(other)
        )
    except CollinearInputError as err:
        raise CollinearTripleError(
            f"Vertices {triple} are collinear, C_{triple[1]} is undefined",
            witness=triple,
        ) from err


def curvature_compare(
    polygon: Polygon,
    index: int,
    convention: CurvatureConvention = CurvatureConvention.SWAP_BOTH,
) -> CurvatureRelation:
    """
    Compares the discrete curvature of V_i with that of V_{i+1}.

    V_i has the greater curvature when V_{i+1} is positive and V_{i+2} lies outside
    the circle C_i, or when V_{i+1} is negative and V_{i+2} lies inside C_i.

    Args:
        polygon (Polygon): The polygon, with at least four vertices.
        index (int): The index i.
        convention (CurvatureConvention, optional): How a negative V_i is treated.
            Default: SWAP_BOTH, under which the rule above holds for every V_i.

    Raises:
        OnCircleDegenerateError: If V_{i+2} lies on C_i.
        DegenerateAngleError: If V_i, V_{i+1}, V_{i+2} are collinear.

    Returns:
        CurvatureRelation: GREATER or LESS.
    """
    i = polygon.index(index)
    following_sign = vertex_sign(polygon, i + 1)
    position = _neighbouring_position(polygon, i, i + 2)
    if position == CirclePosition.ON:
        raise OnCircleDegenerateError(
            f"Vertex {polygon.index(i + 2)} lies on the circle C_{i}",
            witness=tuple(polygon.index(j) for j in range(i - 1, i + 3)),
        )

    greater = (
        following_sign == VertexSign.POSITIVE and position == CirclePosition.OUTSIDE
    ) or (following_sign == VertexSign.NEGATIVE and position == CirclePosition.INSIDE)
    if (
        convention == CurvatureConvention.SWAP_RELATION
        and vertex_sign(polygon, i) == VertexSign.NEGATIVE
    ):
        greater = not greater
    return CurvatureRelation.GREATER if greater else CurvatureRelation.LESS


def _two_point_label(polygon: Polygon, index: int) -> Extremality:
    before = _neighbouring_position(polygon, index, index - 2)
    after = _neighbouring_position(polygon, index, index + 2)
    if before == after == CirclePosition.OUTSIDE:
        return Extremality.MAX
    if before == after == CirclePosition.INSIDE:
        return Extremality.MIN
    return Extremality.NONE


def local_extremality(
    polygon: Polygon,
    index: int,
    convention: CurvatureConvention = CurvatureConvention.SWAP_BOTH,
) -> Extremality:
    """
    Whether V_i is a local maximum (V_{i-1} < V_i > V_{i+1}) or minimum
    (V_{i-1} > V_i < V_{i+1}) of the discrete curvature.

    On a convex polygon this is the same as both V_{i-2} and V_{i+2} lying outside
    (maximum) or inside (minimum) C_i, which is asserted. For quadrilaterals V_{i-2}
    and V_{i+2} are the same vertex.

    Raises:
        TooFewVerticesError: If the polygon has fewer than four vertices.
        OnCircleDegenerateError: If the curvature relations are undefined.
    """
    if polygon.n < 4:
        raise TooFewVerticesError(
            f"Local extremality needs at least 4 vertices, got {polygon.n}"
        )
    before = curvature_compare(polygon, index - 1, convention)
    after = curvature_compare(polygon, index, convention)
    if before == CurvatureRelation.LESS and after == CurvatureRelation.GREATER:
        label = Extremality.MAX
    elif before == CurvatureRelation.GREATER and after == CurvatureRelation.LESS:
        label = Extremality.MIN
    else:
        label = Extremality.NONE

    assert not polygon.is_convex() or label == _two_point_label(polygon, index)
    return label


def radial_extremality(
    polygon: Polygon, index: int, lenient: bool = False
) -> Extremality:
    """
    Whether R_i is a strict local maximum or minimum of the neighbouring circumradii.

    Args:
        polygon (Polygon): The polygon.
        index (int): The index i.
        lenient (bool, optional): Resolve ties by treating both tied vertices as
            extremal (non-strict comparisons) instead of raising. Default: False.

    Raises:
        RadiusTieError: If R_i equals R_{i-1} or R_{i+1} and lenient is False.
        CollinearTripleError: If a neighbouring triple is collinear.
    """
    i = polygon.index(index)
    previous, current, following = (
        polygon.lattice_circle(j).radius_sq for j in (i - 1, i, i + 1)
    )
    if previous == current or current == following:
        tied = (polygon.index(i - 1), i) if previous == current else (
            i,
            polygon.index(i + 1),
        )
        if not lenient:
            raise RadiusTieError(
                f"Neighbouring radii R_{tied[0]} and R_{tied[1]} are equal",
                witness=tied,
            )
        logger.warning(
            f"Neighbouring radii R_{tied[0]} and R_{tied[1]} are equal, treating both "
            "as extremal"
        )
        if previous == current == following:
            return Extremality.NONE
        if previous <= current >= following:
            return Extremality.MAX
        if previous >= current <= following:
            return Extremality.MIN
        return Extremality.NONE

    if previous < current > following:
        return Extremality.MAX
    if previous > current < following:
        return Extremality.MIN
    return Extremality.NONE


def classify_circle(polygon: Polygon, i: int, j: int, k: int) -> CircleClassification:
    """
    Classifies the circle through vertices i, j and k.

    The circle is empty if no other vertex is inside it and full if every other vertex
    is. Below four vertices every circle is vacuously both, and EMPTY is returned.

    Raises:
        PreconditionError: If the indices are not distinct.
        CollinearInputError: If the three vertices are collinear.
        OnCircleWitnessError: If another vertex lies on the circle.
    """
    indices = tuple(polygon.index(index) for index in (i, j, k))
    if len(set(indices)) != 3:
        raise PreconditionError(f"Indices {indices} are not distinct", witness=indices)
    a, b, c = (polygon.lattice[index] for index in indices)
    inside = 0
    for other in range(polygon.n):
        if other in indices:
            continue
        try:
            position = in_circle(a, b, c, polygon.lattice[other])
        except CollinearInputError as err:
            raise CollinearInputError(
                f"Vertices {indices} are collinear", witness=indices
            ) from err
        if position == CirclePosition.ON:
            raise OnCircleWitnessError(
                f"Vertex {other} lies on the circle through vertices {indices}",
                witness=indices + (other,),
            )
        if position == CirclePosition.INSIDE:
            inside += 1

    if inside == 0:
        containment = Containment.EMPTY
    elif inside == polygon.n - 3:
        containment = Containment.FULL
    else:
        containment = Containment.MIXED
    return CircleClassification(containment, adjacency(polygon.n, *indices))


def global_extremality(polygon: Polygon, index: int) -> Extremality:
    """
    MAX if the neighbouring circle C_i is empty, MIN if it is full, NONE otherwise.
    """
    containment = classify_circle(polygon, *polygon.triple(index)).containment
    if containment == Containment.EMPTY:
        return Extremality.MAX
    if containment == Containment.FULL:
        return Extremality.MIN
    return Extremality.NONE


def require_generic(polygon: Polygon) -> None:
    predicates = polygon.predicates
    if not predicates.generic:
        raise NotGenericError(
            f"Polygon is not generic, witness {predicates.generic_witness}",
            witness=predicates.generic_witness,
        )


def require_convex(polygon: Polygon) -> None:
    if not polygon.is_convex():
        witness = polygon.convexity_witness() or polygon.simplicity_witness()
        raise NotConvexError(
            f"Polygon is not convex, witness {witness}", witness=witness
        )


def bose_counts(polygon: Polygon) -> BoseCounts:
    """
    Classifies the circle through every triple of vertices and counts the full and
    empty ones by adjacency.

    Raises:
        NotConvexError: If the polygon is not convex.
        NotGenericError: If the polygon is not generic.
    """
    require_convex(polygon)
    require_generic(polygon)

    counts: Dict[Tuple[Containment, Adjacency], int] = {}
    n = polygon.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                classification = classify_circle(polygon, i, j, k)
                counts[classification] = counts.get(classification, 0) + 1

    def count(containment: Containment, kind: Adjacency) -> int:
        return counts.get((containment, kind), 0)

    return BoseCounts(
        s_plus=count(Containment.FULL, Adjacency.NEIGHBORING),
        s_minus=count(Containment.EMPTY, Adjacency.NEIGHBORING),
        t_plus=count(Containment.FULL, Adjacency.DISJOINT),
        t_minus=count(Containment.EMPTY, Adjacency.DISJOINT),
        u_plus=count(Containment.FULL, Adjacency.INTERMEDIATE),
        u_minus=count(Containment.EMPTY, Adjacency.INTERMEDIATE),
    )


def _labels(
    polygon: Polygon, classify: Callable[[int], Extremality], strict: bool
) -> Labels:
    labels: Labels = []
    for index in range(polygon.n):
        try:
            labels.append(classify(index))
        except PreconditionError:
            if strict:
                raise
            labels.append(None)
    return labels


def global_labels(polygon: Polygon, strict: bool = True) -> Labels:
    """
    The global label of every vertex. With strict=False, vertices whose neighbouring
    circle passes through another vertex get None instead of raising.
    """
    return _labels(polygon, lambda i: global_extremality(polygon, i), strict)


def local_labels(
    polygon: Polygon,
    strict: bool = True,
    convention: CurvatureConvention = CurvatureConvention.SWAP_BOTH,
) -> Labels:
    """
    The local label of every vertex. With strict=False, vertices whose curvature
    relations are undefined get None instead of raising.
    """
    if polygon.n < 4:
        raise TooFewVerticesError(
            f"Local extremality needs at least 4 vertices, got {polygon.n}"
        )
    return _labels(
        polygon, lambda i: local_extremality(polygon, i, convention), strict
    )


def radial_labels(
    polygon: Polygon, strict: bool = True, lenient: bool = False
) -> Labels:
    """
    The radial label of every vertex. With strict=False, tied or collinear vertices
    get None instead of raising.
    """
    return _labels(polygon, lambda i: radial_extremality(polygon, i, lenient), strict)


def count_labels(labels: Labels, label: Extremality) -> int:
    return sum(1 for value in labels if value == label)


def extremal_indices(labels: Labels) -> List[int]:
    return [
        index
        for index, label in enumerate(labels)
        if label in (Extremality.MAX, Extremality.MIN)
    ]


class ExtremalityReport:
    """
    Labels of every vertex for the three kinds of extremality, with their counts.

    Maximal vertices are counted by the minus counts and minimal vertices by the plus
    counts: s_minus is the number of empty neighbouring circles (global maxima) and
    s_plus the number of full ones.

    Attributes:
        n (int): The number of vertices.
        global_labels (list[Extremality]): Per-vertex global labels.
        local_labels (list[Extremality]): Per-vertex local labels.
        radial_labels (list[Extremality]): Per-vertex radial labels.
        signs (list[VertexSign]): Per-vertex signs.
        bose (BoseCounts, optional): Circle statistics, only for convex polygons.
    """

    n: int
    global_labels: Labels
    local_labels: Labels
    radial_labels: Labels
    signs: List[VertexSign]
    bose: Optional[BoseCounts]

    def __init__(
        self,
        n: int,
        global_labels: Labels,
        local_labels: Labels,
        radial_labels: Labels,
        signs: List[VertexSign],
        bose: Optional[BoseCounts] = None,
    ):
        self.n = n
        self.global_labels = global_labels
        self.local_labels = local_labels
        self.radial_labels = radial_labels
        self.signs = signs
        self.bose = bose

    @property
    def s_minus(self) -> int:
        return count_labels(self.global_labels, Extremality.MAX)

    @property
    def s_plus(self) -> int:
        return count_labels(self.global_labels, Extremality.MIN)

    @property
    def l_minus(self) -> int:
        return count_labels(self.local_labels, Extremality.MAX)

    @property
    def l_plus(self) -> int:
        return count_labels(self.local_labels, Extremality.MIN)

    @property
    def r_minus(self) -> int:
        return count_labels(self.radial_labels, Extremality.MAX)

    @property
    def r_plus(self) -> int:
        return count_labels(self.radial_labels, Extremality.MIN)

    @property
    def t_minus(self) -> Optional[int]:
        return self.bose.t_minus if self.bose is not None else None

    @property
    def t_plus(self) -> Optional[int]:
        return self.bose.t_plus if self.bose is not None else None

    @property
    def u_minus(self) -> Optional[int]:
        return self.bose.u_minus if self.bose is not None else None

    @property
    def u_plus(self) -> Optional[int]:
        return self.bose.u_plus if self.bose is not None else None

    def counts(self) -> Dict[str, Optional[int]]:
        return {
            "s_plus": self.s_plus,
            "s_minus": self.s_minus,
            "t_plus": self.t_plus,
            "t_minus": self.t_minus,
            "u_plus": self.u_plus,
            "u_minus": self.u_minus,
            "l_plus": self.l_plus,
            "l_minus": self.l_minus,
            "r_plus": self.r_plus,
            "r_minus": self.r_minus,
        }

    def __repr__(self) -> str:
        return (
            f"<ExtremalityReport n={self.n}, s=({self.s_minus}, {self.s_plus}), "
            f"l=({self.l_minus}, {self.l_plus}), r=({self.r_minus}, {self.r_plus})>"
        )


def analyze(
    polygon: Polygon,
    require_generic_input: bool = True,
    lenient_radii: bool = False,
    convention: CurvatureConvention = CurvatureConvention.SWAP_BOTH,
) -> ExtremalityReport:
    """
    Labels every vertex of the polygon with its global, local and radial extremality,
    and computes the circle statistics when the polygon is convex.

    Args:
        polygon (Polygon): A polygon with at least four vertices.
        require_generic_input (bool, optional): Check genericity first (O(n^3)).
            Default: True.
        lenient_radii (bool, optional): Passed to `radial_extremality` as lenient.
            Default: False.
        convention (CurvatureConvention, optional): Passed to `curvature_compare`.

    Raises:
        TooFewVerticesError: If the polygon has fewer than four vertices.
        NotGenericError: If require_generic_input and the polygon is not generic.

    Returns:
        ExtremalityReport: The labels and counts.
    """
    if polygon.n < 4:
        raise TooFewVerticesError(
            f"Analysis needs at least 4 vertices, got {polygon.n}"
        )
    if require_generic_input:
        require_generic(polygon)

    bose = bose_counts(polygon) if polygon.is_convex() else None
    report = ExtremalityReport(
        n=polygon.n,
        global_labels=global_labels(polygon),
        local_labels=local_labels(polygon, convention=convention),
        radial_labels=radial_labels(polygon, lenient=lenient_radii),
        signs=[vertex_sign(polygon, index) for index in range(polygon.n)],
        bose=bose,
    )
    logger.debug(f"Analysed {polygon}: {report}")
    return report


def remove_vertex(polygon: Polygon, index: int) -> Polygon:
    """
    Removes vertex i, joining V_{i-1} to V_{i+1} by an edge.

    The result's `parent_indices` refer to the input polygon.

    Raises:
        TooFewVerticesError: If the polygon has fewer than four vertices.
    """
    if polygon.n < 4:
        raise TooFewVerticesError(
            f"Cannot remove a vertex from a polygon with {polygon.n} vertices"
        )
    removed = polygon.index(index)
    return polygon.sub_polygon([j for j in range(polygon.n) if j != removed])
