from typing import NamedTuple, Union

import math
from fractions import Fraction

from py_four_vertex.exceptions import InvalidCircleError, InvalidScalarError

Scalar = Fraction
ScalarLike = Union[str, int, float, Fraction]

# Significant digits used when a rational has no finite decimal expansion.
APPROXIMATE_DIGITS = 15
APPROXIMATE_MARKER = "~"


def parse_scalar(value: ScalarLike) -> Scalar:
    """
    Parses a value into an exact rational.

    Strings are read as decimals (or "p/q" fractions), so "17.59" becomes exactly
    1759/100. Floats are read through their shortest decimal representation, which is
    what was typed in the first place for any float literal.

    Args:
        value (str | int | float | Fraction): The value to parse.

    Raises:
        InvalidScalarError: If the value is not a finite rational number.

    Returns:
        Fraction: The exact value.
    """
    if isinstance(value, bool):
        raise InvalidScalarError(f"Cannot parse boolean {value!r} as a scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidScalarError(f"Cannot parse non-finite value {value!r}")
        value = repr(value)
    if not isinstance(value, str):
        raise InvalidScalarError(f"Cannot parse {type(value)} as a scalar")

    text = value.strip()
    if text.startswith(APPROXIMATE_MARKER):
        raise InvalidScalarError(
            f"Refusing to parse approximate value {value!r}, it is not exact"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise InvalidScalarError(f"Cannot parse {value!r} as a scalar") from err


def format_scalar(value: Scalar) -> str:
    """
    Formats a rational as a decimal string.

    Values with a finite decimal expansion are written exactly, so that parsing the
    output with `parse_scalar` gives back the same rational. Other values are written
    with 15 significant digits, prefixed with "~" to mark them as approximate.

    Args:
        value (Fraction): The value to format.

    Returns:
        str: The decimal representation.
    """
    value = Fraction(value)
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f"{APPROXIMATE_MARKER}{float(value):.{APPROXIMATE_DIGITS}g}"

    places = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** places // value.denominator
    sign = "-" if value < 0 else ""
    if places == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


class Point(NamedTuple):
    """
    A point in the plane with exact rational coordinates.

    Integer coordinates are also accepted, which is what polygons use internally for
    their scaled copies.
    """

    x: Scalar
    y: Scalar

    @classmethod
    def parse(cls, x: ScalarLike, y: ScalarLike) -> "Point":
        return cls(parse_scalar(x), parse_scalar(y))

    def __str__(self) -> str:
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"


def squared_distance(a: Point, b: Point) -> Scalar:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


class Circle:
    """
    A circle, stored using its center and its squared radius so that comparisons
    between circles stay exact.

    Args:
        center (Point): The center of the circle.
        radius_sq (Fraction): The square of the radius.

    Raises:
        InvalidCircleError: If radius_sq is not positive.

    Attributes:
        center (Point): The center of the circle.
        radius_sq (Fraction): The square of the radius.
    """

    center: Point
    radius_sq: Scalar

    def __init__(self, center: Point, radius_sq: Scalar):
        if radius_sq <= 0:
            raise InvalidCircleError(
                f"Invalid circle, squared radius must be positive ({radius_sq}<=0)"
            )
        self.center = center
        self.radius_sq = Fraction(radius_sq)

    @property
    def radius(self) -> float:
        """
        The radius as a float, for drawing. Use radius_sq for comparisons.
        """
        return math.sqrt(self.radius_sq)

    def power(self, point: Point) -> Scalar:
        """
        The power of a point with respect to the circle: negative inside, zero on the
        circle and positive outside.
        """
        return squared_distance(point, self.center) - self.radius_sq

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circle):
            raise NotImplementedError(f"Can't compare Circle with {type(other)}")

        return self.center == other.center and self.radius_sq == other.radius_sq

    def __hash__(self) -> int:
        return hash((self.center, self.radius_sq))

    def __repr__(self) -> str:
        return (
            f"<Circle center={self.center}, radius_sq={format_scalar(self.radius_sq)}>"
        )
