"""
The discrete evolute of a polygon, its cusps, and discrete winding numbers.
"""
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import logging
import math
from enum import Enum, auto

from .common import Point, squared_distance
from .components import Polygon
from .exceptions import (
    DegenerateAngleError,
    DegenerateEvoluteError,
    UnclassifiableAngleError,
    UndefinedWindingError,
)
from .extremality import (
    Extremality,
    VertexSign,
    local_labels,
    require_generic,
    vertex_sign,
)
from .predicates import TAU, angle_at

logger = logging.getLogger("FourVertex")

DEFAULT_ANGLE_TOLERANCE = 1e-6
DEFAULT_WINDING_TOLERANCE = 1e-6


class CuspFlag(Enum):
    CUSP = auto()
    FLAT = auto()


class WindingNumber(NamedTuple):
    """
    A discrete winding number.

    Attributes:
        value (int): The winding number, rounded to the nearest integer.
        raw (float): The sum of (pi - angle) over all vertices, before dividing by
            2 pi and rounding.
    """

    value: int
    raw: float

    @property
    def residual(self) -> float:
        return abs(self.raw / TAU - self.value)


class Evolute:
    """
    The centers O_0, ..., O_{n-1} of the neighbouring circles of a closed polygon, in
    the polygon's order.

    The centers need not be distinct, and the figure they form need not be simple.
    When every center is the same point (as for a polygon inscribed in a circle) the
    evolute is degenerate.

    Attributes:
        centers (tuple[Point]): The exact centers.
        degenerate (bool): Whether all centers coincide.
    """

    centers: Tuple[Point, ...]
    degenerate: bool

    def __init__(self, centers: Sequence[Point]):
        self.centers = tuple(centers)
        self.degenerate = len(set(self.centers)) == 1

    @property
    def n(self) -> int:
        return len(self.centers)

    def __len__(self) -> int:
        return len(self.centers)

    def __getitem__(self, index: int) -> Point:
        return self.centers[index % self.n]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.centers)

    def angle(self, index: int) -> float:
        """
        The left angle of the evolute at O_i, measured along the order
        O_{i-1} -> O_i -> O_{i+1}.

        Raises:
            DegenerateAngleError: If the three centers are collinear or two coincide.
        """
        i = index % self.n
        try:
            return angle_at(self[i - 1], self[i], self[i + 1])
        except DegenerateAngleError as err:
            witness = ((i - 1) % self.n, i, (i + 1) % self.n)
            raise DegenerateAngleError(
                f"Evolute angle at O_{i} is undefined, centers {witness} are "
                "collinear or coincide",
                witness=witness,
            ) from err

    def distinct_centers(self) -> List[Point]:
        """
        The centers with cyclically consecutive repeats merged into one point.
        """
        points: List[Point] = []
        for center in self.centers:
            if not points or points[-1] != center:
                points.append(center)
        while len(points) > 1 and points[0] == points[-1]:
            points.pop()
        return points

    def equidistance_witness(self, polygon: Polygon) -> Optional[int]:
        """
        Returns the first index i for which O_i is not exactly equidistant from
        V_{i-1}, V_i and V_{i+1}, or None.
        """
        for index, center in enumerate(self.centers):
            distances = {
                squared_distance(center, polygon[j]) for j in polygon.triple(index)
            }
            if len(distances) != 1:
                return index
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Evolute):
            raise NotImplementedError(f"Can't compare Evolute with {type(other)}")
        return self.centers == other.centers

    def __repr__(self) -> str:
        return f"<Evolute n={self.n}, degenerate={self.degenerate}>"


class EvoluteIdentity(NamedTuple):
    """
    The two sides of the identity N+ - N- = 2 wind(P) - 2 wind(E(P)).

    Attributes:
        n_plus (int): Locally extremal vertices with positive sign.
        n_minus (int): Locally extremal vertices with negative sign.
        wind_p (WindingNumber): The winding number of the polygon.
        wind_e (WindingNumber): The winding number of its evolute.
        holds (bool): Whether the identity holds with the rounded winding numbers.
    """

    n_plus: int
    n_minus: int
    wind_p: WindingNumber
    wind_e: WindingNumber
    holds: bool


def evolute(polygon: Polygon) -> Evolute:
    """
    Computes the evolute of a closed polygon exactly.

    Raises:
        CollinearTripleError: If some V_{i-1}, V_i, V_{i+1} are collinear.

    Returns:
        Evolute: The n centers in the polygon's order.
    """
    result = Evolute(
        [polygon.neighbouring_circle(index).center for index in range(polygon.n)]
    )
    if result.degenerate:
        logger.debug(f"{polygon} has a degenerate evolute at {result.centers[0]}")
    return result


def _winding(angles: Sequence[float], tolerance: float) -> WindingNumber:
    raw = math.fsum(math.pi - angle for angle in angles)
    winding = WindingNumber(value=round(raw / TAU), raw=raw)
    if winding.residual >= tolerance:
        logger.warning(
            f"Winding sum {raw} is {winding.residual} turns away from an integer"
        )
    return winding


def winding_number(
    figure: Union[Polygon, Evolute], tolerance: float = DEFAULT_WINDING_TOLERANCE
) -> WindingNumber:
    """
    The discrete winding number: the sum of (pi - left angle) over all vertices,
    divided by 2 pi.

    For an evolute, consecutive repeated centers are merged first, since they are the
    same point of the figure.

    Args:
        figure (Polygon | Evolute): A closed polygon, or an evolute.
        tolerance (float, optional): Distance from an integer (in turns) above which a
            warning is logged. Default: 1e-6.

    Raises:
        DegenerateAngleError: If some left angle is undefined.
        UndefinedWindingError: If the evolute is degenerate (fewer than three
            distinct centers).

    Returns:
        WindingNumber: The rounded value and the raw sum.
    """
    if isinstance(figure, Evolute):
        points = figure.distinct_centers()
        if figure.degenerate or len(points) < 3:
            raise UndefinedWindingError(
                "The winding number of a degenerate evolute is undefined"
            )
        m = len(points)
        angles = []
        for index in range(m):
            try:
                angles.append(
                    angle_at(points[index - 1], points[index], points[(index + 1) % m])
                )
            except DegenerateAngleError as err:
                raise DegenerateAngleError(
                    f"Evolute angle at {points[index]} is undefined", witness=(index,)
                ) from err
        return _winding(angles, tolerance)

    return _winding([figure.left_angle(index) for index in range(figure.n)], tolerance)


def _classify_difference(
    difference: float, index: int, tolerance: float
) -> CuspFlag:
    if abs(difference) < tolerance:
        return CuspFlag.FLAT
    if abs(abs(difference) - math.pi) < tolerance:
        return CuspFlag.CUSP
    raise UnclassifiableAngleError(
        f"Angle difference {difference} at vertex {index} is near neither 0 nor pi",
        witness=(index,),
    )


def cusp_flags(
    polygon: Polygon,
    tolerance: float = DEFAULT_ANGLE_TOLERANCE,
    strict: bool = True,
) -> List[Optional[CuspFlag]]:
    """
    Flags each center O_i as a cusp or flat, from the difference between the left
    angle at V_i and the left angle of the evolute at O_i.

    A difference of pi (either sign) is a cusp and a difference of 0 is flat. In
    strict mode the polygon must be generic, and each flag is checked against the
    local extremality of V_i: V_i is locally extremal exactly when O_i is a cusp.

    Args:
        polygon (Polygon): The polygon.
        tolerance (float, optional): Angle tolerance in radians. Default: 1e-6.
        strict (bool, optional): If False, indices whose angles are undefined (or
            whose difference is unclassifiable) get None instead of raising, and the
            genericity check is skipped. Default: True.

    Raises:
        NotGenericError: In strict mode, if the polygon is not generic.
        DegenerateEvoluteError: If all centers coincide.
        DegenerateAngleError: In strict mode, if some angle is undefined.
        UnclassifiableAngleError: In strict mode, if some difference is near neither
            0 nor pi.
    """
    if strict:
        require_generic(polygon)
    centers = evolute(polygon)
    if centers.degenerate:
        raise DegenerateEvoluteError(
            f"All centers of {polygon} coincide at {centers.centers[0]}"
        )

    flags: List[Optional[CuspFlag]] = []
    for index in range(polygon.n):
        try:
            difference = polygon.left_angle(index) - centers.angle(index)
            flags.append(_classify_difference(difference, index, tolerance))
        except (DegenerateAngleError, UnclassifiableAngleError):
            if strict:
                raise
            flags.append(None)

    if strict:
        labels = local_labels(polygon)
        for flag, label in zip(flags, labels):
            assert (flag == CuspFlag.CUSP) == (label != Extremality.NONE)
    return flags


def verify_evolute_identity(
    polygon: Polygon, tolerance: float = DEFAULT_WINDING_TOLERANCE
) -> EvoluteIdentity:
    """
    Checks N+ - N- = 2 wind(P) - 2 wind(E(P)), where N+ and N- count the locally
    extremal vertices of positive and negative sign.

    Raises:
        NotGenericError: If the polygon is not generic.
        DegenerateEvoluteError: If all centers coincide.
    """
    require_generic(polygon)
    centers = evolute(polygon)
    if centers.degenerate:
        raise DegenerateEvoluteError(
            f"All centers of {polygon} coincide at {centers.centers[0]}"
        )

    n_plus = n_minus = 0
    for index, label in enumerate(local_labels(polygon)):
        if label == Extremality.NONE:
            continue
        if vertex_sign(polygon, index) == VertexSign.POSITIVE:
            n_plus += 1
        else:
            n_minus += 1

    wind_p = winding_number(polygon, tolerance)
    wind_e = winding_number(centers, tolerance)
    holds = n_plus - n_minus == 2 * wind_p.value - 2 * wind_e.value
    if not holds:
        logger.warning(
            f"Evolute identity fails for {polygon}: N+={n_plus}, N-={n_minus}, "
            f"wind(P)={wind_p.value}, wind(E)={wind_e.value}"
        )
    return EvoluteIdentity(n_plus, n_minus, wind_p, wind_e, holds)
