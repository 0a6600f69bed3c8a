from typing import Dict, Optional

import logging
from enum import Enum
from fractions import Fraction

import numpy as np

from .components import Polygon
from .exceptions import PreconditionError, TooFewVerticesError

logger = logging.getLogger("FourVertex")

SAMPLE_DIGITS = 12
MIN_SAMPLES = 8

DEFAULT_CURVE_PARAMS: Dict[str, Dict[str, float]] = {
    "ellipse": {"a": 1.0, "b": 0.63},
    "flower": {"k": 6, "amplitude": 0.01},
}


class CurveKind(Enum):
    ELLIPSE = "ellipse"
    FLOWER = "flower"


def _truncate(values: np.ndarray, digits: int):
    scale = 10 ** digits
    return [Fraction(int(value), scale) for value in np.trunc(values * scale)]


def sample_parametric(
    kind: str, params: Optional[Dict[str, float]] = None, m: int = 64
) -> Polygon:
    """
    Samples a smooth closed curve at m uniformly spaced parameters t_j = 2 pi j / m
    and returns the polygon through the samples.

    Curves:
        ellipse: x(t) = a cos(t), y(t) = b sin(t). Defaults a=1, b=0.63.
        flower: the polar curve r(t) = 1 + amplitude sin(k t). Defaults k=6,
            amplitude=1/100. The curve stays convex while amplitude * k^2 < 1.

    Coordinates are truncated to 12 decimal digits, so the polygon is exact and
    reproducible.

    Args:
        kind (str): "ellipse" or "flower".
        params (dict, optional): Overrides of the curve's default parameters.
        m (int, optional): The number of samples, at least 8. Default: 64.

    Raises:
        TooFewVerticesError: If m is less than 8.
        PreconditionError: If the kind or a parameter name is unknown.

    Returns:
        Polygon: The sampled polygon, counterclockwise.
    """
    try:
        curve = CurveKind(kind)
    except ValueError as err:
        raise PreconditionError(f"Unknown curve kind '{kind}'") from err
    if m < MIN_SAMPLES:
        raise TooFewVerticesError(f"Need at least {MIN_SAMPLES} samples, got {m}")

    curve_params = dict(DEFAULT_CURVE_PARAMS[curve.value])
    for name, value in (params or {}).items():
        if name not in curve_params:
            raise PreconditionError(f"Unknown parameter '{name}' for {curve.value}")
        curve_params[name] = value

    t = 2 * np.pi * np.arange(m) / m
    if curve == CurveKind.ELLIPSE:
        xs = curve_params["a"] * np.cos(t)
        ys = curve_params["b"] * np.sin(t)
    else:
        radius = 1 + curve_params["amplitude"] * np.sin(curve_params["k"] * t)
        xs = radius * np.cos(t)
        ys = radius * np.sin(t)

    logger.debug(f"Sampled {m} points of {curve.value} with {curve_params}")
    return Polygon.from_coordinates(
        _truncate(xs, SAMPLE_DIGITS), _truncate(ys, SAMPLE_DIGITS)
    )
