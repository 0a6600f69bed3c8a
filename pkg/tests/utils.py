from typing import Sequence, Tuple

from py_four_vertex.components import Polygon
from py_four_vertex.corpus import get_entry

Coordinates = Sequence[Tuple[int, int]]

# Small integer polygons with hand-checked labels.
QUADRILATERAL = [(0, 0), (6, 0), (5, 3), (0, 2)]
PENTAGON = [(0, 0), (5, 0), (7, 3), (3, 7), (-1, 4)]
HEXAGON = [(0, 0), (5, -1), (9, 2), (9, 6), (4, 8), (0, 5)]
# Vertex 3 is reflex.
NONCONVEX_PENTAGON = [(0, 0), (7, 0), (6, 5), (3, 2), (0, 6)]
BOWTIE = [(0, 0), (2, 2), (2, 0), (0, 2)]


def create_polygon(coordinates: Coordinates, **kwargs) -> Polygon:
    return Polygon(list(coordinates), **kwargs)


def create_square(side: int = 1, **kwargs) -> Polygon:
    return create_polygon([(0, 0), (side, 0), (side, side), (0, side)], **kwargs)


def create_quadrilateral() -> Polygon:
    return create_polygon(QUADRILATERAL)


def create_pentagon() -> Polygon:
    return create_polygon(PENTAGON)


def create_hexagon() -> Polygon:
    return create_polygon(HEXAGON)


def create_nonconvex_pentagon() -> Polygon:
    return create_polygon(NONCONVEX_PENTAGON)


def create_corpus_polygon(entry_id: str) -> Polygon:
    return get_entry(entry_id).polygon()
