from typing import IO, Any, List, Optional

import csv
import json
import logging
import os
from enum import Enum

from .common import format_scalar
from .components import Polygon
from .exceptions import PolygonFileError

logger = logging.getLogger("FourVertex")


class PolygonFormat(Enum):
    CSV = "csv"
    JSON = "json"


def detect_format(path: str) -> PolygonFormat:
    """
    Picks the format from the file extension, defaulting to CSV.
    """
    extension = os.path.splitext(path)[1].lower().lstrip(".")
    if extension == "json":
        return PolygonFormat.JSON
    if extension not in ("csv", "txt", ""):
        logger.warning(f"Unknown extension '.{extension}', reading {path} as CSV")
    return PolygonFormat.CSV


def load_file(
    path_to_file: str, polygon_format: Optional[PolygonFormat] = None, **kwargs: Any
) -> Polygon:
    """
    Loads a polygon from the specified file path.

    The format is detected from the extension unless given. All other arguments are
    passed to `load`, see the documentation for `load`.

    Returns:
        Polygon: The polygon in the file.
    """
    if polygon_format is None:
        polygon_format = detect_format(path_to_file)
    try:
        with open(path_to_file, "r", newline="") as in_file:
            return load(in_file, polygon_format=polygon_format, **kwargs)
    except OSError as err:
        raise PolygonFileError(f"Could not read {path_to_file}: {err}") from err


def load(
    polygon_file: IO, polygon_format: PolygonFormat = PolygonFormat.CSV, **kwargs: Any
) -> Polygon:
    """
    Loads a polygon from a file.

    Formats:
        CSV: two rows, the x coordinates then the y coordinates, one column per vertex
            (the 2 x n matrix layout). Blank lines are ignored.
        JSON: a list of [x, y] pairs. Coordinates should be decimal strings, which are
            parsed exactly; numbers are accepted too.

    Args:
        polygon_file (io): The file, opened in text mode.
        polygon_format (PolygonFormat, optional): Default: CSV.
        kwargs: Passed to `Polygon`. See the documentation for `Polygon`.

    Raises:
        PolygonFileError: If the file does not have the expected structure.
        InvalidScalarError: If a coordinate cannot be parsed.

    Returns:
        Polygon: The polygon in the file.
    """
    if polygon_format == PolygonFormat.JSON:
        try:
            data = json.load(polygon_file)
        except ValueError as err:
            raise PolygonFileError(f"Invalid JSON: {err}") from err
        if not isinstance(data, list) or not all(
            isinstance(pair, list) and len(pair) == 2 for pair in data
        ):
            raise PolygonFileError("JSON polygon must be a list of [x, y] pairs")
        xs = [pair[0] for pair in data]
        ys = [pair[1] for pair in data]
    else:
        rows = [
            [cell.strip() for cell in row if cell.strip()]
            for row in csv.reader(polygon_file)
        ]
        rows = [row for row in rows if row]
        if len(rows) != 2:
            raise PolygonFileError(f"CSV polygon must have 2 rows, found {len(rows)}")
        xs, ys = rows
        if len(xs) != len(ys):
            raise PolygonFileError(
                f"Rows have different lengths ({len(xs)}!={len(ys)})"
            )

    try:
        return Polygon.from_coordinates(xs, ys, **kwargs)
    except ValueError as err:
        raise PolygonFileError(str(err)) from err


def _rows(polygon: Polygon) -> List[List[str]]:
    return [
        [format_scalar(point.x) for point in polygon],
        [format_scalar(point.y) for point in polygon],
    ]


def dump(
    polygon: Polygon,
    polygon_file: IO,
    polygon_format: PolygonFormat = PolygonFormat.CSV,
) -> None:
    """
    Writes the polygon in the given format. Coordinates with a finite decimal
    expansion are written exactly, others are approximated and marked.
    """
    xs, ys = _rows(polygon)
    if polygon_format == PolygonFormat.JSON:
        json.dump([[x, y] for x, y in zip(xs, ys)], polygon_file)
        polygon_file.write("\n")
        return
    writer = csv.writer(polygon_file, lineterminator="\n")
    writer.writerow(xs)
    writer.writerow(ys)


def dump_file(
    polygon: Polygon,
    path_to_file: str,
    polygon_format: Optional[PolygonFormat] = None,
) -> None:
    if polygon_format is None:
        polygon_format = detect_format(path_to_file)
    with open(path_to_file, "w", newline="") as out_file:
        dump(polygon, out_file, polygon_format)
