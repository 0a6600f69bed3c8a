from typing import (
    TYPE_CHECKING,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Set,
    Tuple,
)

import logging
from enum import Enum, auto
from functools import lru_cache

import numpy as np

from . import predicates
from .components import Polygon
from .exceptions import (
    FlipLimitExceededError,
    InvalidTriangulationError,
    NoBalancedDiagonalError,
)
from .extremality import require_convex, require_generic
from .predicates import CirclePosition

if TYPE_CHECKING:
    from numpy.random import Generator

logger = logging.getLogger("FourVertex")

Diagonal = Tuple[int, int]
Triangle = Tuple[int, int, int]


class EdgeKind(Enum):
    DELAUNAY = auto()
    ANTI_DELAUNAY = auto()
    NEITHER = auto()
    BOTH = auto()


def _diagonal(i: int, j: int) -> Diagonal:
    return (i, j) if i < j else (j, i)


def _crosses(first: Diagonal, second: Diagonal) -> bool:
    a, b = first
    c, d = second
    return a < c < b < d or c < a < d < b


class Triangulation:
    """
    A triangulation of a convex n-gon, given by its n - 3 non-crossing diagonals.

    Args:
        n (int): The number of vertices.
        diagonals (iterable[tuple[int, int]]): The diagonals, as vertex index pairs.
        polygon (Polygon, optional): The polygon being triangulated.

    Raises:
        InvalidTriangulationError: If the diagonals are not a triangulation.

    Attributes:
        n (int): The number of vertices.
        diagonals (frozenset[tuple[int, int]]): Sorted index pairs.
        triangles (frozenset[tuple[int, int, int]]): Sorted index triples, n - 2 of
            them.
        polygon (Polygon, optional): The polygon being triangulated.
    """

    n: int
    diagonals: FrozenSet[Diagonal]
    triangles: FrozenSet[Triangle]
    polygon: Optional[Polygon]

    def __init__(
        self,
        n: int,
        diagonals: Iterable[Diagonal],
        polygon: Optional[Polygon] = None,
    ):
        self.n = n
        self.polygon = polygon
        self.diagonals = frozenset(_diagonal(i % n, j % n) for i, j in diagonals)

        if len(self.diagonals) != n - 3:
            raise InvalidTriangulationError(
                f"A triangulation of a {n}-gon has {n - 3} diagonals, got "
                f"{len(self.diagonals)}"
            )
        for i, j in self.diagonals:
            if (j - i) % n in (0, 1, n - 1):
                raise InvalidTriangulationError(
                    f"({i}, {j}) is not a diagonal", witness=(i, j)
                )
        ordered = sorted(self.diagonals)
        for index, first in enumerate(ordered):
            for second in ordered[index + 1 :]:
                if _crosses(first, second):
                    raise InvalidTriangulationError(
                        f"Diagonals {first} and {second} cross",
                        witness=first + second,
                    )
        self.triangles = frozenset(self._find_triangles())

    def _find_triangles(self) -> Iterator[Triangle]:
        neighbours = _neighbours(self.n, self.diagonals)
        for a in range(self.n):
            for b in neighbours[a]:
                if b <= a:
                    continue
                for c in neighbours[a] & neighbours[b]:
                    if c > b:
                        yield (a, b, c)

    def sides(self, diagonal: Diagonal) -> Tuple[int, int]:
        """
        The numbers of vertices of the two polygons the diagonal cuts off.
        """
        i, j = _diagonal(*diagonal)
        return (j - i + 1, self.n - (j - i) + 1)

    def __contains__(self, diagonal: object) -> bool:
        if not isinstance(diagonal, tuple):
            return False
        return _diagonal(*diagonal) in self.diagonals

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangulation):
            raise NotImplementedError(f"Can't compare Triangulation with {type(other)}")
        return self.n == other.n and self.diagonals == other.diagonals

    def __hash__(self) -> int:
        return hash((self.n, self.diagonals))

    def __repr__(self) -> str:
        return f"<Triangulation n={self.n}, diagonals={sorted(self.diagonals)}>"


def _neighbours(n: int, diagonals: Iterable[Diagonal]) -> List[Set[int]]:
    neighbours = [{(index - 1) % n, (index + 1) % n} for index in range(n)]
    for i, j in diagonals:
        neighbours[i].add(j)
        neighbours[j].add(i)
    return neighbours


def fan_triangulation(n: int, apex: int = 0) -> Triangulation:
    return Triangulation(
        n, [(apex, (apex + offset) % n) for offset in range(2, n - 1)]
    )


def _flip(
    polygon: Polygon,
    anti: bool,
    max_flips: Optional[int],
    rng: Optional["Generator"],
) -> Triangulation:
    n = polygon.n
    points = polygon.lattice
    diagonals = set(fan_triangulation(n).diagonals)
    neighbours = _neighbours(n, diagonals)
    # Flip when the opposite apex is inside (Delaunay) or outside (anti-Delaunay)
    unwanted = CirclePosition.OUTSIDE if anti else CirclePosition.INSIDE
    budget = max_flips if max_flips is not None else n * n
    flips = 0

    changed = True
    while changed:
        changed = False
        order = sorted(diagonals)
        if rng is not None:
            rng.shuffle(order)
        for i, j in order:
            if (i, j) not in diagonals:
                continue
            k, l = sorted(neighbours[i] & neighbours[j])
            if predicates.in_circle(points[i], points[j], points[k], points[l]) != (
                unwanted
            ):
                continue
            if flips >= budget:
                raise FlipLimitExceededError(
                    f"Gave up after {flips} flips triangulating {polygon}"
                )
            diagonals.remove((i, j))
            neighbours[i].discard(j)
            neighbours[j].discard(i)
            diagonals.add(_diagonal(k, l))
            neighbours[k].add(l)
            neighbours[l].add(k)
            flips += 1
            changed = True

    kind = "anti-Delaunay" if anti else "Delaunay"
    logger.debug(f"{kind} triangulation of {polygon} took {flips} flips")
    return Triangulation(n, diagonals, polygon=polygon)


@lru_cache(maxsize=64)
def _cached_flip(polygon: Polygon, anti: bool) -> Triangulation:
    return _flip(polygon, anti, None, None)


def delaunay(
    polygon: Polygon,
    max_flips: Optional[int] = None,
    rng: Optional["Generator"] = None,
) -> Triangulation:
    """
    The Delaunay triangulation of a generic convex polygon: the unique triangulation
    whose triangles all have empty circumcircles.

    Computed by flipping diagonals of the fan triangulation from vertex 0 until every
    diagonal is locally Delaunay.

    Args:
        polygon (Polygon): A generic convex polygon.
        max_flips (int, optional): Flip budget. Defaults to n^2.
        rng (numpy.random.Generator, optional): If given, diagonals are visited in a
            random order. The result does not depend on the order.

    Raises:
        NotConvexError: If the polygon is not convex.
        NotGenericError: If the polygon is not generic.
        FlipLimitExceededError: If the flip budget runs out.
    """
    require_convex(polygon)
    require_generic(polygon)
    if max_flips is None and rng is None:
        return _cached_flip(polygon, False)
    return _flip(polygon, False, max_flips, rng)


def anti_delaunay(
    polygon: Polygon,
    max_flips: Optional[int] = None,
    rng: Optional["Generator"] = None,
) -> Triangulation:
    """
    The anti-Delaunay triangulation of a generic convex polygon: the unique
    triangulation whose triangles all have full circumcircles.

    Same as `delaunay` with the flip condition reversed.
    """
    require_convex(polygon)
    require_generic(polygon)
    if max_flips is None and rng is None:
        return _cached_flip(polygon, True)
    return _flip(polygon, True, max_flips, rng)


def edge_kind(polygon: Polygon, i: int, j: int) -> EdgeKind:
    """
    Whether the edge or diagonal (i, j) is a Delaunay edge (some empty circle passes
    through V_i and V_j), an anti-Delaunay edge (some full circle does), both, or
    neither.

    Boundary edges belong to every triangulation, so they are BOTH.

    Raises:
        InvalidTriangulationError: If i and j are the same vertex.
        NotConvexError: If the polygon is not convex.
        NotGenericError: If the polygon is not generic.
    """
    i, j = polygon.index(i), polygon.index(j)
    if i == j:
        raise InvalidTriangulationError(f"({i}, {j}) is not an edge", witness=(i, j))
    in_delaunay = (i, j) in delaunay(polygon)
    in_anti_delaunay = (i, j) in anti_delaunay(polygon)
    if polygon.is_adjacent(i, j) or (in_delaunay and in_anti_delaunay):
        return EdgeKind.BOTH
    if in_delaunay:
        return EdgeKind.DELAUNAY
    if in_anti_delaunay:
        return EdgeKind.ANTI_DELAUNAY
    return EdgeKind.NEITHER


def _inside_counts(polygon: Polygon, i: int, j: int) -> Iterator[int]:
    points = polygon.lattice
    for k in range(polygon.n):
        if k in (i, j):
            continue
        yield sum(
            1
            for q in range(polygon.n)
            if q not in (i, j, k)
            and predicates.in_circle(points[i], points[j], points[k], points[q])
            == CirclePosition.INSIDE
        )


def has_empty_circle(polygon: Polygon, i: int, j: int) -> bool:
    """
    Brute force: whether some circle through V_i, V_j and a third vertex has no vertex
    inside it. For generic points in convex position this is the same as (i, j) being
    a Delaunay edge.
    """
    i, j = polygon.index(i), polygon.index(j)
    return any(count == 0 for count in _inside_counts(polygon, i, j))


def has_full_circle(polygon: Polygon, i: int, j: int) -> bool:
    """
    Brute force: whether some circle through V_i, V_j and a third vertex has every
    other vertex inside it.
    """
    i, j = polygon.index(i), polygon.index(j)
    return any(count == polygon.n - 3 for count in _inside_counts(polygon, i, j))


def is_balanced(triangulation: Triangulation, diagonal: Diagonal) -> bool:
    return min(triangulation.sides(diagonal)) >= 4


def balanced_diagonal(triangulation: Triangulation) -> Diagonal:
    """
    Returns a diagonal of the triangulation which leaves at least four vertices on
    each side. Among those, the most even split is chosen (then the smallest pair).

    Every triangulation of a convex polygon with at least seven vertices has one.

    Raises:
        NoBalancedDiagonalError: If there is none, which can happen for n <= 6.
    """
    candidates = [
        diagonal
        for diagonal in sorted(triangulation.diagonals)
        if is_balanced(triangulation, diagonal)
    ]
    if not candidates:
        raise NoBalancedDiagonalError(
            f"{triangulation} has no diagonal with 4 or more vertices on each side"
        )

    def imbalance(diagonal: Diagonal) -> int:
        first, second = triangulation.sides(diagonal)
        return abs(first - second)

    return min(candidates, key=imbalance)


@lru_cache(maxsize=None)
def _catalan(k: int) -> int:
    if k <= 1:
        return 1
    return sum(_catalan(i) * _catalan(k - 1 - i) for i in range(k))


def _sub_triangulations(i: int, j: int) -> List[FrozenSet[Diagonal]]:
    if j - i < 2:
        return [frozenset()]
    results = []
    for k in range(i + 1, j):
        own = frozenset(
            pair for pair in ((i, k), (k, j)) if pair[1] - pair[0] >= 2
        )
        for left in _sub_triangulations(i, k):
            for right in _sub_triangulations(k, j):
                results.append(own | left | right)
    return results


def enumerate_triangulations(n: int) -> Iterator[Triangulation]:
    """
    Yields every triangulation of a convex n-gon. There are Catalan(n - 2) of them.
    """
    for diagonals in _sub_triangulations(0, n - 1):
        yield Triangulation(n, diagonals)


def random_triangulation(n: int, rng: "Generator") -> Triangulation:
    """
    A triangulation of a convex n-gon drawn uniformly at random.

    The apex of the triangle on each base (i, j) is drawn with probability
    proportional to the number of triangulations it leaves on either side.
    """
    diagonals: Set[Diagonal] = set()
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        apexes = np.arange(i + 1, j)
        weights = np.array(
            [_catalan(k - i - 1) * _catalan(j - k - 1) for k in apexes], dtype=float
        )
        k = int(rng.choice(apexes, p=weights / weights.sum()))
        for pair in ((i, k), (k, j)):
            if pair[1] - pair[0] >= 2:
                diagonals.add(pair)
        stack.extend([(i, k), (k, j)])
    return Triangulation(n, diagonals)
