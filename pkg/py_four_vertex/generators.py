from typing import Iterator, NamedTuple, Tuple

import logging
import os
from enum import Enum
from fractions import Fraction

import numpy as np

from .components import Polygon
from .exceptions import (
    DuplicateVertexError,
    PreconditionError,
    RejectionBudgetExceededError,
    TooFewVerticesError,
)

logger = logging.getLogger("FourVertex")

DEFAULT_SEED = 20240607
DEFAULT_PERTURBATION = Fraction(1, 64)
DEFAULT_DIGITS = 6
DEFAULT_REJECTION_BUDGET = 1000
SEED_ENVIRONMENT_VARIABLE = "FOURVERTEX_SEED"

# How far each angle may move within its slot of width 2 pi / n
ANGLE_JITTER = {"convex-generic": 0.9, "convex-generic-coherent": 0.5}
NONCONVEX_RADIUS_SPREAD = 0.6


class GeneratorKind(Enum):
    CONVEX_GENERIC = "convex-generic"
    CONVEX_GENERIC_COHERENT = "convex-generic-coherent"
    SIMPLE_NONCONVEX = "simple-nonconvex"


class GeneratorConfig(NamedTuple):
    """
    Everything that determines a generated polygon.

    Attributes:
        n (int): The number of vertices, at least 3.
        seed (int): The seed of the numpy random generator.
        kind (GeneratorKind): What sort of polygon to draw.
        perturbation (Fraction): The radial perturbation of convex polygons, as a
            fraction of the circumradius. Default: 1/64.
        digits (int): Coordinates are rounded to this many decimal digits.
            Default: 6.
        rejection_budget (int): How many draws to try. Default: 1000.
    """

    n: int
    seed: int
    kind: GeneratorKind = GeneratorKind.CONVEX_GENERIC
    perturbation: Fraction = DEFAULT_PERTURBATION
    digits: int = DEFAULT_DIGITS
    rejection_budget: int = DEFAULT_REJECTION_BUDGET


def default_seed() -> int:
    """
    The seed from the FOURVERTEX_SEED environment variable, or DEFAULT_SEED.
    """
    value = os.environ.get(SEED_ENVIRONMENT_VARIABLE)
    if value is None:
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError as err:
        raise PreconditionError(
            f"{SEED_ENVIRONMENT_VARIABLE} must be an integer, got '{value}'"
        ) from err


def _stratified_angles(rng: np.random.Generator, n: int, jitter: float) -> np.ndarray:
    offsets = 0.5 + jitter * (rng.random(n) - 0.5)
    return 2 * np.pi * (np.arange(n) + offsets) / n


def _draw(rng: np.random.Generator, config: GeneratorConfig) -> Polygon:
    n = config.n
    if config.kind == GeneratorKind.SIMPLE_NONCONVEX:
        angles = _stratified_angles(rng, n, 0.9)
        radii = 1 - NONCONVEX_RADIUS_SPREAD * rng.random(n)
    else:
        angles = _stratified_angles(rng, n, ANGLE_JITTER[config.kind.value])
        radii = 1 + float(config.perturbation) * (2 * rng.random(n) - 1)
    scale = 10 ** config.digits
    xs = np.rint(radii * np.cos(angles) * scale).astype(np.int64)
    ys = np.rint(radii * np.sin(angles) * scale).astype(np.int64)
    return Polygon.from_coordinates(
        [Fraction(int(x), scale) for x in xs], [Fraction(int(y), scale) for y in ys]
    )


def _accept(polygon: Polygon, kind: GeneratorKind) -> bool:
    if kind == GeneratorKind.SIMPLE_NONCONVEX:
        if polygon.simplicity_witness() is not None:
            return False
        return polygon.predicates.generic
    if not polygon.is_convex():
        return False
    predicates = polygon.predicates
    if kind == GeneratorKind.CONVEX_GENERIC_COHERENT:
        return predicates.generic and predicates.coherent
    return predicates.generic


def generate(config: GeneratorConfig) -> Polygon:
    """
    Draws a random polygon of the configured kind, deterministically from the seed.

    Convex kinds place n points at jittered, sorted angles on the unit circle with
    independent radial perturbations, and resample until the polygon is convex and
    generic (and coherent, for the coherent kind, which jitters the angles less).
    The non-convex kind draws a star-shaped polygon with large radial jitter, which is
    always simple, and resamples until it is generic.

    Raises:
        TooFewVerticesError: If n is less than 3.
        RejectionBudgetExceededError: If no acceptable polygon is drawn within the
            rejection budget.
    """
    if config.n < 3:
        raise TooFewVerticesError(f"Cannot generate a polygon with {config.n} vertices")
    rng = np.random.default_rng(config.seed)
    for attempt in range(1, config.rejection_budget + 1):
        try:
            polygon = _draw(rng, config)
        except DuplicateVertexError:
            continue
        if _accept(polygon, config.kind):
            logger.debug(
                f"Generated {config.kind.value} {config.n}-gon with seed "
                f"{config.seed} after {attempt} draws"
            )
            return polygon
    raise RejectionBudgetExceededError(
        f"No {config.kind.value} {config.n}-gon in {config.rejection_budget} draws "
        f"with seed {config.seed}"
    )


def generate_many(
    kind: GeneratorKind,
    n_range: Tuple[int, int],
    count: int,
    seed: int,
) -> Iterator[Tuple[GeneratorConfig, Polygon]]:
    """
    Yields count polygons with sizes cycling through n_range (inclusive) and seeds
    seed, seed + 1, ....
    """
    low, high = n_range
    accepted = 0
    for index in range(count):
        config = GeneratorConfig(
            n=low + index % (high - low + 1), seed=seed + index, kind=kind
        )
        try:
            polygon = generate(config)
        except RejectionBudgetExceededError as err:
            logger.warning(f"Skipping draw: {err}")
            continue
        accepted += 1
        yield config, polygon
    if accepted < count:
        logger.warning(f"Only {accepted} of {count} {kind.value} draws succeeded")
