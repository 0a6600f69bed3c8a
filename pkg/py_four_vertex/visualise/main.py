from typing import IO, TYPE_CHECKING, List, NamedTuple, Optional, Union

import logging

import matplotlib
from matplotlib.figure import Figure
from matplotlib.lines import Line2D
from matplotlib.patches import Circle as CirclePatch

from py_four_vertex.common import Point
from py_four_vertex.components import Polygon
from py_four_vertex.evolute import evolute
from py_four_vertex.exceptions import PreconditionError
from py_four_vertex.extremality import Extremality, Labels, local_labels

if TYPE_CHECKING:
    from matplotlib.axes import Axes

logger = logging.getLogger("FourVertex")

DPI = 100
SVG_HASH_SALT = "fourvertex"

STYLES = {
    "polygon": {"linewidth": 1.5},
    "evolute": {"linewidth": 1},
    "circle": {"linewidth": 0.5, "alpha": 0.3, "linestyle": ":"},
    "marker": {"marker": "o", "markersize": 5, "linestyle": "none"},
}


class RenderSpec(NamedTuple):
    """
    How to draw a polygon.

    The polygon is blue and its evolute green. Local maxima are marked red and local
    minima orange.

    Attributes:
        polygon_color (str): Stroke color of the polygon. Default: "blue".
        evolute_color (str): Stroke color of the evolute. Default: "green".
        max_color (str): Marker color of maximal vertices. Default: "red".
        min_color (str): Marker color of minimal vertices. Default: "orange".
        size (int): Width and height of the canvas in pixels. Default: 600.
        show_evolute (bool): Draw the evolute. Default: True.
        show_circles (bool): Draw the neighbouring circles. Default: False.
        label_vertices (bool): Write each vertex's index next to it. Default: False.
    """

    polygon_color: str = "blue"
    evolute_color: str = "green"
    max_color: str = "red"
    min_color: str = "orange"
    size: int = 600
    show_evolute: bool = True
    show_circles: bool = False
    label_vertices: bool = False


def _xy(point: Point):
    return float(point.x), float(point.y)


def _draw_closed(
    ax: "Axes", points: List[Point], color: str, prefix: str, style: dict
) -> None:
    # One artist per segment, so each becomes its own SVG group.
    for index, start in enumerate(points):
        end = points[(index + 1) % len(points)]
        (x0, y0), (x1, y1) = _xy(start), _xy(end)
        ax.add_line(
            Line2D([x0, x1], [y0, y1], color=color, gid=f"{prefix}-{index}", **style)
        )


def _draw_evolute(ax: "Axes", polygon: Polygon, spec: RenderSpec) -> None:
    try:
        centers = evolute(polygon)
    except PreconditionError as err:
        logger.warning(f"Not drawing the evolute: {err}")
        return
    if centers.degenerate:
        x, y = _xy(centers[0])
        ax.add_line(
            Line2D(
                [x],
                [y],
                color=spec.evolute_color,
                gid="evolute-point",
                **STYLES["marker"],
            )
        )
        return
    _draw_closed(
        ax, list(centers), spec.evolute_color, "evolute-edge", STYLES["evolute"]
    )


def _draw_circles(ax: "Axes", polygon: Polygon, spec: RenderSpec) -> None:
    for index in range(polygon.n):
        try:
            circle = polygon.neighbouring_circle(index)
        except PreconditionError:
            continue
        ax.add_patch(
            CirclePatch(
                _xy(circle.center),
                circle.radius,
                fill=False,
                edgecolor=spec.polygon_color,
                gid=f"circle-{index}",
                **STYLES["circle"],
            )
        )


def _draw_markers(ax: "Axes", polygon: Polygon, labels: Labels, spec: RenderSpec):
    colors = {Extremality.MAX: spec.max_color, Extremality.MIN: spec.min_color}
    for index, label in enumerate(labels):
        if label not in colors:
            continue
        x, y = _xy(polygon[index])
        ax.add_line(
            Line2D(
                [x],
                [y],
                color=colors[label],
                gid=f"{label.name.lower()}-vertex-{index}",
                **STYLES["marker"],
            )
        )


def render(
    polygon: Polygon,
    spec: Optional[RenderSpec] = None,
    out: Union[str, IO] = "polygon.svg",
) -> None:
    """
    Draws the polygon, and optionally its evolute, neighbouring circles and vertex
    indices, to an SVG file.

    Every polygon edge i is a separate SVG group with id "polygon-edge-i", and every
    evolute edge i one with id "evolute-edge-i". A degenerate evolute is drawn as a
    single point with id "evolute-point". Locally extremal vertices are marked when
    they can be classified.

    The output is deterministic: it carries no date and uses a fixed hash salt for
    its internal ids.

    Args:
        polygon (Polygon): The polygon to draw.
        spec (RenderSpec, optional): Colors, size and flags. Default: RenderSpec().
        out (str or file): Where to write the SVG. Default: "polygon.svg".
    """
    spec = spec or RenderSpec()
    figure = Figure(figsize=(spec.size / DPI, spec.size / DPI), dpi=DPI)
    ax = figure.add_axes([0, 0, 1, 1])
    ax.set_aspect("equal")
    ax.axis("off")

    _draw_closed(
        ax, list(polygon), spec.polygon_color, "polygon-edge", STYLES["polygon"]
    )
    if spec.show_evolute:
        _draw_evolute(ax, polygon, spec)
    if spec.show_circles:
        _draw_circles(ax, polygon, spec)
    if polygon.n >= 4:
        _draw_markers(ax, polygon, local_labels(polygon, strict=False), spec)
    if spec.label_vertices:
        for index, point in enumerate(polygon):
            ax.annotate(
                str(index),
                _xy(point),
                textcoords="offset points",
                xytext=(4, 4),
                fontsize=8,
            )

    ax.autoscale_view()
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        figure.savefig(out, format="svg", metadata={"Date": None})
    logger.debug(f"Rendered {polygon} to {out}")
