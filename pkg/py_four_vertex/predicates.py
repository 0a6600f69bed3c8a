"""
Exact geometric predicates.

Every predicate here is the sign of a polynomial in the coordinates, so they are exact
for rational coordinates (and for integer coordinates, which are much faster). Only the
angle functions use floating point.
"""
from typing import NamedTuple, Union

import math
from enum import Enum, auto
from fractions import Fraction

from .common import Circle, Point, squared_distance
from .exceptions import (
    CollinearInputError,
    DegenerateAngleError,
    OnCircleDegenerateError,
)

TAU = 2 * math.pi

Number = Union[int, Fraction]


class Orientation(Enum):
    LEFT = auto()
    RIGHT = auto()
    COLLINEAR = auto()


class CirclePosition(Enum):
    INSIDE = auto()
    OUTSIDE = auto()
    ON = auto()


def cross(origin: Point, a: Point, b: Point) -> Number:
    """
    The cross product (a - origin) x (b - origin), i.e. twice the signed area of the
    triangle (origin, a, b).
    """
    return (a.x - origin.x) * (b.y - origin.y) - (a.y - origin.y) * (b.x - origin.x)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """
    Returns whether c lies to the left of, to the right of, or on the directed line
    from a to b.

    Args:
        a (Point): The first point.
        b (Point): The second point.
        c (Point): The third point.

    Returns:
        Orientation: LEFT if (a, b, c) is counterclockwise, RIGHT if clockwise, and
            COLLINEAR otherwise.
    """
    determinant = cross(a, b, c)
    if determinant > 0:
        return Orientation.LEFT
    if determinant < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def in_circle_determinant(a: Point, b: Point, c: Point, q: Point) -> Number:
    """
    The lifted 3x3 determinant. It is positive when q lies inside the circle through
    a, b, c and (a, b, c) is counterclockwise.
    """
    adx = a.x - q.x
    ady = a.y - q.y
    bdx = b.x - q.x
    bdy = b.y - q.y
    cdx = c.x - q.x
    cdy = c.y - q.y
    return (
        (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - ady * cdx)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx)
    )


def in_circle(a: Point, b: Point, c: Point, q: Point) -> CirclePosition:
    """
    Returns the position of q relative to the circle through a, b and c.

    The result does not depend on the order of a, b and c.

    Args:
        a (Point): A point on the circle.
        b (Point): A point on the circle.
        c (Point): A point on the circle.
        q (Point): The point to locate.

    Raises:
        CollinearInputError: If a, b and c are collinear.

    Returns:
        CirclePosition: INSIDE, OUTSIDE or ON.
    """
    turn = cross(a, b, c)
    if turn == 0:
        raise CollinearInputError(f"No circle passes through collinear {a}, {b}, {c}")
    determinant = in_circle_determinant(a, b, c, q)
    if turn < 0:
        determinant = -determinant
    if determinant > 0:
        return CirclePosition.INSIDE
    if determinant < 0:
        return CirclePosition.OUTSIDE
    return CirclePosition.ON


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    """
    Returns the exact center of the circle through a, b and c.

    Solves the 2x2 linear system 2 * [a - c; b - c] * center = [|a|^2 - |c|^2;
    |b|^2 - |c|^2] by Cramer's rule.

    Raises:
        CollinearInputError: If a, b and c are collinear.
    """
    a1 = a.x - c.x
    a2 = a.y - c.y
    b1 = b.x - c.x
    b2 = b.y - c.y
    denominator = 2 * (a1 * b2 - a2 * b1)
    if denominator == 0:
        raise CollinearInputError(
            f"No circumcenter exists for collinear {a}, {b}, {c}"
        )
    c_norm = c.x * c.x + c.y * c.y
    rhs_a = a.x * a.x + a.y * a.y - c_norm
    rhs_b = b.x * b.x + b.y * b.y - c_norm
    x = Fraction(rhs_a * b2 - a2 * rhs_b) / denominator
    y = Fraction(a1 * rhs_b - b1 * rhs_a) / denominator
    return Point(x, y)


def circumradius_sq(a: Point, b: Point, c: Point) -> Fraction:
    """
    Returns the exact squared radius of the circle through a, b and c.

    Raises:
        CollinearInputError: If a, b and c are collinear.
    """
    return Fraction(squared_distance(circumcenter(a, b, c), a))


def circumcircle(a: Point, b: Point, c: Point) -> Circle:
    center = circumcenter(a, b, c)
    return Circle(center, squared_distance(center, a))


def angle_at(previous: Point, vertex: Point, following: Point) -> float:
    """
    The angle at vertex on the left of the path previous -> vertex -> following.

    This is the angle between previous - vertex and following - vertex, reflexed to
    2 pi minus the angle when the path turns right.

    Raises:
        DegenerateAngleError: If the three points are collinear (or two coincide).

    Returns:
        float: The angle in radians, strictly between 0 and 2 pi.
    """
    s1x = previous.x - vertex.x
    s1y = previous.y - vertex.y
    s2x = following.x - vertex.x
    s2y = following.y - vertex.y
    determinant = s1x * s2y - s1y * s2x
    if determinant == 0:
        raise DegenerateAngleError(
            f"Angle at {vertex} is undefined, {previous}, {vertex}, {following} are "
            "collinear"
        )
    theta = math.atan2(abs(float(determinant)), float(s1x * s2x + s1y * s2y))
    if determinant > 0:
        return TAU - theta
    return theta


def circle_exchange(a: Point, b: Point, c: Point, x: Point) -> CirclePosition:
    """
    Predicts where c lies relative to the circle through x, a and b, using only where
    x lies relative to the line ab and the circle through a, b and c.

    If x is on the same side of ab as c, then x inside circle(a, b, c) puts c outside
    circle(x, a, b) and x outside puts c inside. On the opposite side the relation is
    preserved instead.

    Raises:
        CollinearInputError: If x or c lies on the line ab.
        OnCircleDegenerateError: If x lies on the circle through a, b and c.
    """
    side_c = orientation(a, b, c)
    side_x = orientation(a, b, x)
    if Orientation.COLLINEAR in (side_c, side_x):
        raise CollinearInputError(f"Points must not lie on the line through {a}, {b}")
    position = in_circle(a, b, c, x)
    if position == CirclePosition.ON:
        raise OnCircleDegenerateError(f"{x} lies on the circle through {a}, {b}, {c}")

    flipped = {
        CirclePosition.INSIDE: CirclePosition.OUTSIDE,
        CirclePosition.OUTSIDE: CirclePosition.INSIDE,
    }
    if side_c == side_x:
        return flipped[position]
    return position


class ExchangeClauses(NamedTuple):
    """
    The four implications relating circle(a, b, c), circle(x, a, b) and the half-planes
    of the line ab. A clause whose premise is false holds vacuously.
    """

    same_side_inside: bool
    same_side_outside: bool
    opposite_side_inside: bool
    opposite_side_outside: bool

    def all_hold(self) -> bool:
        return all(self)


def halfplane_exchange(a: Point, b: Point, c: Point, x: Point) -> ExchangeClauses:
    """
    Evaluates each half-plane exchange clause directly with `in_circle`:

    - x inside circle(a, b, c) on c's side of ab implies c is outside circle(x, a, b);
    - x outside circle(a, b, c) on c's side implies c is inside circle(x, a, b);
    - x inside circle(a, b, c) opposite c implies c is inside circle(x, a, b);
    - x outside circle(a, b, c) opposite c implies c is outside circle(x, a, b).

    Raises:
        CollinearInputError: If x or c lies on the line ab.
        OnCircleDegenerateError: If x lies on the circle through a, b and c.
    """
    side_c = orientation(a, b, c)
    side_x = orientation(a, b, x)
    if Orientation.COLLINEAR in (side_c, side_x):
        raise CollinearInputError(f"Points must not lie on the line through {a}, {b}")
    x_position = in_circle(a, b, c, x)
    if x_position == CirclePosition.ON:
        raise OnCircleDegenerateError(f"{x} lies on the circle through {a}, {b}, {c}")
    c_position = in_circle(x, a, b, c)

    same_side = side_c == side_x
    inside = x_position == CirclePosition.INSIDE
    return ExchangeClauses(
        same_side_inside=not (same_side and inside)
        or c_position == CirclePosition.OUTSIDE,
        same_side_outside=not (same_side and not inside)
        or c_position == CirclePosition.INSIDE,
        opposite_side_inside=not (not same_side and inside)
        or c_position == CirclePosition.INSIDE,
        opposite_side_outside=not (not same_side and not inside)
        or c_position == CirclePosition.OUTSIDE,
    )
