from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import logging
from fractions import Fraction
from functools import reduce
from math import gcd

from .common import Circle, Point, ScalarLike, format_scalar
from .exceptions import (
    CollinearInputError,
    CollinearTripleError,
    DegenerateAngleError,
    DuplicateVertexError,
    TooFewVerticesError,
)
from .predicates import angle_at, circumcircle, cross

logger = logging.getLogger("FourVertex")

VertexLike = Union[Point, Tuple[ScalarLike, ScalarLike]]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _on_segment(a: Point, b: Point, q: Point) -> bool:
    # Assumes q is collinear with a and b.
    return min(a.x, b.x) <= q.x <= max(a.x, b.x) and min(a.y, b.y) <= q.y <= max(
        a.y, b.y
    )


def segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """
    Whether the closed segments p1p2 and p3p4 share at least one point.
    """
    d1 = cross(p3, p4, p1)
    d2 = cross(p3, p4, p2)
    d3 = cross(p1, p2, p3)
    d4 = cross(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    return any(
        [
            d1 == 0 and _on_segment(p3, p4, p1),
            d2 == 0 and _on_segment(p3, p4, p2),
            d3 == 0 and _on_segment(p1, p2, p3),
            d4 == 0 and _on_segment(p1, p2, p4),
        ]
    )


class Polygon:
    """
    A cyclic sequence of distinct vertices with exact rational coordinates.

    All indices are taken modulo the number of vertices, so polygon[-1] is the last
    vertex and polygon[n] is the first. A closed polygon supplied in clockwise order is
    reversed into counterclockwise order at construction (vertex 0 stays first), and
    `reversed_on_load` records that this happened.

    Args:
        vertices (list): The vertices, as Points or (x, y) pairs of anything
            `parse_scalar` accepts.
        closed (bool, optional): Whether this is a closed polygon rather than an open
            polygonal curve. Default: True.
        normalise_orientation (bool, optional): Whether to reverse clockwise closed
            polygons. Default: True.
        parent_indices (list[int], optional): For polygons cut out of another polygon,
            the index of each vertex in that parent polygon. Defaults to 0..n-1.

    Raises:
        TooFewVerticesError: If there are fewer than three vertices.
        DuplicateVertexError: If two vertices coincide.

    Attributes:
        vertices (tuple[Point]): The vertices in counterclockwise order.
        closed (bool): Whether the polygon is closed.
        reversed_on_load (bool): Whether the input order was reversed.
        parent_indices (tuple[int]): The index of each vertex in the parent polygon.
        lattice (tuple[Point]): The vertices scaled by the common denominator of all
            coordinates, so they have integer coordinates. Predicates give the same
            answers on the lattice copy, and are much faster there.
    """

    vertices: Tuple[Point, ...]
    closed: bool
    reversed_on_load: bool
    parent_indices: Tuple[int, ...]
    lattice: Tuple[Point, ...]
    scale: int
    __circles: Dict[int, Circle]
    __lattice_circles: Dict[int, Circle]
    __predicates: Optional["PolygonPredicates"] = None
    __convex: Optional[bool] = None
    __simple_witness: Optional[Tuple[int, ...]] = None
    __simple: Optional[bool] = None

    def __init__(
        self,
        vertices: Sequence[VertexLike],
        closed: bool = True,
        normalise_orientation: bool = True,
        parent_indices: Optional[Sequence[int]] = None,
    ):
        points = [
            vertex if isinstance(vertex, Point) else Point.parse(*vertex)
            for vertex in vertices
        ]
        if len(points) < 3:
            raise TooFewVerticesError(
                f"A polygon needs at least 3 vertices, got {len(points)}"
            )
        if parent_indices is None:
            parent_indices = range(len(points))
        if len(parent_indices) != len(points):
            raise ValueError("parent_indices must have one entry per vertex")

        seen: Dict[Point, int] = {}
        for index, point in enumerate(points):
            if point in seen:
                raise DuplicateVertexError(
                    f"Vertices {seen[point]} and {index} coincide at {point}",
                    witness=(seen[point], index),
                )
            seen[point] = index

        indices = list(parent_indices)
        self.reversed_on_load = False
        if closed and normalise_orientation and _signed_area2(points) < 0:
            logger.warning(
                "Polygon was given in clockwise order, reversing it to counterclockwise"
            )
            points = [points[0]] + points[:0:-1]
            indices = [indices[0]] + indices[:0:-1]
            self.reversed_on_load = True

        self.vertices = tuple(
            Point(Fraction(point.x), Fraction(point.y)) for point in points
        )
        self.closed = closed
        self.parent_indices = tuple(indices)
        self.scale = reduce(
            _lcm,
            (c.denominator for point in self.vertices for c in point),
            1,
        )
        self.lattice = tuple(
            Point(
                (point.x * self.scale).numerator, (point.y * self.scale).numerator
            )
            for point in self.vertices
        )
        self.__circles = {}
        self.__lattice_circles = {}

    @classmethod
    def from_coordinates(
        cls, xs: Sequence[ScalarLike], ys: Sequence[ScalarLike], **kwargs
    ) -> "Polygon":
        """
        Creates a polygon from a row of x coordinates and a row of y coordinates, the
        layout of a 2 x n coordinate matrix.
        """
        if len(xs) != len(ys):
            raise ValueError(f"Rows have different lengths ({len(xs)}!={len(ys)})")
        return cls(list(zip(xs, ys)), **kwargs)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, index: int) -> Point:
        return self.vertices[index % self.n]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def index(self, index: int) -> int:
        return index % self.n

    def triple(self, index: int) -> Tuple[int, int, int]:
        """
        The indices (i-1, i, i+1) of the neighbouring triple centered at index.
        """
        i = index % self.n
        return ((i - 1) % self.n, i, (i + 1) % self.n)

    def is_adjacent(self, i: int, j: int) -> bool:
        return (i - j) % self.n in (1, self.n - 1)

    def lattice_point(self, index: int) -> Point:
        return self.lattice[index % self.n]

    @property
    def signed_area2(self) -> Fraction:
        """
        Twice the signed area, positive for counterclockwise polygons.
        """
        return Fraction(_signed_area2(self.lattice), self.scale * self.scale)

    def neighbouring_circle(self, index: int) -> Circle:
        """
        The circle C_i through the vertices i-1, i and i+1.

        Raises:
            CollinearTripleError: If the three vertices are collinear.
        """
        i = index % self.n
        if i not in self.__circles:
            triple = self.triple(i)
            try:
                self.__circles[i] = circumcircle(*(self.vertices[j] for j in triple))
            except CollinearInputError as err:
                raise CollinearTripleError(
                    f"Vertices {triple} are collinear, C_{i} is undefined",
                    witness=triple,
                ) from err
        return self.__circles[i]

    def lattice_circle(self, index: int) -> Circle:
        """
        The circle C_i of the lattice copy. Only its comparisons are meaningful.
        """
        i = index % self.n
        if i not in self.__lattice_circles:
            triple = self.triple(i)
            try:
                self.__lattice_circles[i] = circumcircle(
                    *(self.lattice[j] for j in triple)
                )
            except CollinearInputError as err:
                raise CollinearTripleError(
                    f"Vertices {triple} are collinear, C_{i} is undefined",
                    witness=triple,
                ) from err
        return self.__lattice_circles[i]

    def radius_sq(self, index: int) -> Fraction:
        return self.neighbouring_circle(index).radius_sq

    def left_angle(self, index: int) -> float:
        """
        The angle at vertex i on the left of the direction of travel, in (0, 2 pi).

        Raises:
            DegenerateAngleError: If vertices i-1, i, i+1 are collinear.
        """
        triple = self.triple(index)
        try:
            return angle_at(*(self.lattice[j] for j in triple))
        except DegenerateAngleError as err:
            raise DegenerateAngleError(
                f"Left angle at vertex {triple[1]} is undefined, vertices {triple} are "
                "collinear",
                witness=triple,
            ) from err

    def sub_polygon(self, indices: Sequence[int]) -> "Polygon":
        """
        Returns the polygon formed by the given vertices, in the given order.

        The `parent_indices` of the result refer to this polygon's indices.
        """
        normalised = [index % self.n for index in indices]
        return Polygon(
            [self.vertices[index] for index in normalised],
            closed=self.closed,
            parent_indices=normalised,
        )

    def reversed(self) -> "Polygon":
        """
        Returns the same polygon traversed in the opposite direction, starting from
        the same vertex. The result is not normalised back to counterclockwise.
        """
        order = [0] + list(range(self.n - 1, 0, -1))
        return Polygon(
            [self.vertices[index] for index in order],
            closed=self.closed,
            normalise_orientation=False,
            parent_indices=order,
        )

    @property
    def predicates(self) -> "PolygonPredicates":
        if self.__predicates is None:
            self.__predicates = polygon_predicates(self)
        return self.__predicates

    def is_convex(self) -> bool:
        """
        Whether every vertex turns left (counterclockwise) and the polygon is simple.
        Cheaper than computing all of `predicates`.
        """
        if self.__convex is None:
            self.__convex = (
                self.convexity_witness() is None and self.simplicity_witness() is None
            )
        return self.__convex

    def convexity_witness(self) -> Optional[Tuple[int, int, int]]:
        for index in range(self.n):
            triple = self.triple(index)
            if cross(*(self.lattice[j] for j in triple)) <= 0:
                return triple
        return None

    def simplicity_witness(self) -> Optional[Tuple[int, ...]]:
        """
        Returns the vertex indices of two edges which meet outside of a shared
        endpoint, or None if the polygon is simple.
        """
        if self.__simple is not None:
            return self.__simple_witness

        self.__simple = True
        points = self.lattice
        n = self.n
        edge_count = n if self.closed else n - 1
        for i in range(edge_count):
            a, b = points[i], points[(i + 1) % n]
            # Consecutive edges fold back on themselves when collinear and opposite.
            if self.closed or i + 2 < n:
                c = points[(i + 2) % n]
                if cross(a, b, c) == 0 and (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (
                    c.y - b.y
                ) > 0:
                    self.__simple = False
                    self.__simple_witness = (i, (i + 1) % n, (i + 2) % n)
                    return self.__simple_witness
            for j in range(i + 2, edge_count):
                if self.closed and i == 0 and j == n - 1:
                    continue
                if segments_intersect(a, b, points[j], points[(j + 1) % n]):
                    self.__simple = False
                    self.__simple_witness = (i, (i + 1) % n, j, (j + 1) % n)
                    return self.__simple_witness
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polygon):
            raise NotImplementedError(f"Can't compare Polygon with {type(other)}")

        return self.vertices == other.vertices and self.closed == other.closed

    def __hash__(self) -> int:
        return hash((self.vertices, self.closed))

    def __repr__(self) -> str:
        vertices = ", ".join(str(vertex) for vertex in self.vertices[:4])
        if self.n > 4:
            vertices += ", ..."
        return f"<Polygon n={self.n}, vertices=[{vertices}]>"

    def describe(self) -> List[List[str]]:
        """
        The vertices as [x, y] pairs of decimal strings.
        """
        return [[format_scalar(point.x), format_scalar(point.y)] for point in self]


def _signed_area2(points: Sequence[Point]):
    total = 0
    for index, point in enumerate(points):
        following = points[(index + 1) % len(points)]
        total += point.x * following.y - following.x * point.y
    return total


class PolygonPredicates:
    """
    The report returned by `polygon_predicates`.

    Each flag which is False carries a witness: the vertex indices showing why.

    Attributes:
        convex (bool): Every vertex turns left and the polygon is simple.
        simple (bool): Edges only meet at shared endpoints.
        ccw (bool): The signed area is positive.
        generic (bool): No three vertices are collinear and no four are concyclic.
        coherent (bool): Every center O_i lies in the closed cone at V_i spanned by
            the rays towards V_{i-1} and V_{i+1}.
        convex_witness (tuple[int], optional): A triple (i-1, i, i+1) not turning left,
            or the simple_witness.
        simple_witness (tuple[int], optional): Two intersecting edges.
        generic_witness (tuple[int], optional): A collinear triple or a concyclic
            quadruple (sorted indices).
        coherent_witness (tuple[int], optional): A vertex whose center is outside its
            cone.
        radius_ties (list[tuple[int, int]]): Pairs (i, i+1) with equal neighbouring
            radii R_i = R_{i+1}, reported apart from concyclicity.
    """

    convex: bool
    simple: bool
    ccw: bool
    generic: bool
    coherent: bool
    convex_witness: Optional[Tuple[int, ...]]
    simple_witness: Optional[Tuple[int, ...]]
    generic_witness: Optional[Tuple[int, ...]]
    coherent_witness: Optional[Tuple[int, ...]]
    radius_ties: List[Tuple[int, int]]

    def __init__(
        self,
        ccw: bool,
        simple_witness: Optional[Tuple[int, ...]],
        convex_witness: Optional[Tuple[int, ...]],
        generic_witness: Optional[Tuple[int, ...]],
        coherent_witness: Optional[Tuple[int, ...]],
        radius_ties: List[Tuple[int, int]],
    ):
        self.ccw = ccw
        self.simple_witness = simple_witness
        self.convex_witness = convex_witness
        self.generic_witness = generic_witness
        self.coherent_witness = coherent_witness
        self.radius_ties = radius_ties
        self.simple = simple_witness is None
        self.convex = convex_witness is None
        self.generic = generic_witness is None
        self.coherent = coherent_witness is None

    def to_dict(self) -> Dict:
        def witness(value: Optional[Tuple[int, ...]]) -> Optional[List[int]]:
            return list(value) if value is not None else None

        return {
            "convex": self.convex,
            "simple": self.simple,
            "ccw": self.ccw,
            "generic": self.generic,
            "coherent": self.coherent,
            "witnesses": {
                "convex": witness(self.convex_witness),
                "simple": witness(self.simple_witness),
                "generic": witness(self.generic_witness),
                "coherent": witness(self.coherent_witness),
            },
            "radius_ties": [list(pair) for pair in self.radius_ties],
        }

    def __repr__(self) -> str:
        return (
            f"<PolygonPredicates convex={self.convex}, simple={self.simple}, "
            f"ccw={self.ccw}, generic={self.generic}, coherent={self.coherent}>"
        )


def genericity_witness(polygon: Polygon) -> Optional[Tuple[int, ...]]:
    """
    Returns a collinear triple or a concyclic quadruple of vertex indices, or None if
    the polygon is generic.

    Every triple is checked for collinearity; circles through non-collinear triples are
    hashed exactly, and a circle collecting four distinct vertices is a witness. This
    takes O(n^3) time.
    """
    points = polygon.lattice
    n = polygon.n
    circles: Dict[Circle, set] = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if cross(points[i], points[j], points[k]) == 0:
                    return (i, j, k)
                circle = circumcircle(points[i], points[j], points[k])
                members = circles.setdefault(circle, set())
                members.update((i, j, k))
                if len(members) >= 4:
                    return tuple(sorted(members))
    return None


def coherence_witness(polygon: Polygon) -> Optional[Tuple[int, ...]]:
    """
    Returns the first vertex i whose center O_i is not in the closed cone at V_i
    spanned by the rays to V_{i-1} and V_{i+1}, or None if the polygon is coherent.
    """
    for index in range(polygon.n):
        previous, vertex, following = (
            polygon.lattice[j] for j in polygon.triple(index)
        )
        spread = cross(vertex, previous, following)
        if spread == 0:
            return (index,)
        center = polygon.lattice_circle(index).center
        first = cross(vertex, previous, center)
        second = cross(vertex, center, following)
        if first * spread < 0 or second * spread < 0:
            return (index,)
    return None


def radius_ties(polygon: Polygon) -> List[Tuple[int, int]]:
    """
    Pairs (i, i+1) of neighbouring circles with exactly equal radii. Collinear triples
    are skipped.
    """
    radii: List[Optional[Fraction]] = []
    for index in range(polygon.n):
        try:
            radii.append(polygon.lattice_circle(index).radius_sq)
        except CollinearTripleError:
            radii.append(None)
    return [
        (index, (index + 1) % polygon.n)
        for index in range(polygon.n)
        if radii[index] is not None
        and radii[index] == radii[(index + 1) % polygon.n]
    ]


def polygon_predicates(polygon: Polygon) -> PolygonPredicates:
    """
    Computes the convex, simple, ccw, generic and coherent flags of a closed polygon,
    together with a witness for each flag which is False.

    Args:
        polygon (Polygon): The polygon.

    Returns:
        PolygonPredicates: The flags and witnesses.
    """
    simple_witness = polygon.simplicity_witness()
    convex_witness = polygon.convexity_witness()
    if convex_witness is None:
        convex_witness = simple_witness
    generic_witness = genericity_witness(polygon)
    try:
        coherent_witness = coherence_witness(polygon)
    except CollinearTripleError as err:
        coherent_witness = err.witness[1:2]
    return PolygonPredicates(
        ccw=polygon.signed_area2 > 0,
        simple_witness=simple_witness,
        convex_witness=convex_witness,
        generic_witness=generic_witness,
        coherent_witness=coherent_witness,
        radius_ties=radius_ties(polygon),
    )
