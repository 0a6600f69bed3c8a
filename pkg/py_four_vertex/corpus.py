from typing import Dict, List, NamedTuple, Optional, Tuple, Union

import logging
import os

from .components import Polygon
from .decomposition import InequalityReport, decompose, verify_inequalities
from .exceptions import CorpusEntryNotFoundError, PolygonFileError

logger = logging.getLogger("FourVertex")

FIXTURES_PATH = os.path.join(os.path.dirname(__file__), "data", "fixtures.txt")
CORPUS_PREFIX = "corpus:"

FixtureValue = Union[int, Tuple[int, ...]]


class Fixture(NamedTuple):
    """
    A pinned diagonal of a corpus polygon and the values expected when cutting along
    it.
    """

    id: str
    diagonal: Tuple[int, int]
    expectations: Dict[str, FixtureValue]


class CorpusEntry(NamedTuple):
    """
    A polygon from the published examples, with coordinates as decimal strings so
    that they parse exactly.

    Attributes:
        id (str): The corpus id.
        xs (tuple[str]): The x coordinates, first row of the 2 x n matrix.
        ys (tuple[str]): The y coordinates, second row.
        description (str): What the polygon demonstrates.
        fixture (Fixture, optional): The pinned diagonal, if there is one.
    """

    id: str
    xs: Tuple[str, ...]
    ys: Tuple[str, ...]
    description: str
    fixture: Optional[Fixture] = None

    @property
    def n(self) -> int:
        return len(self.xs)

    def polygon(self) -> Polygon:
        return Polygon.from_coordinates(self.xs, self.ys)


_MATRICES = [
    (
        "hexagon-radial",
        "convex hexagon which is not coherent, with six radially extremal vertices",
        "18.38 17.59 13.58 26.21 23.68 21.88",
        "-2.05 -2.41 -6.13 -5.82 -3.54 -2.9",
    ),
    (
        "dodecagon-split",
        "convex 12-gon on which the naive sum bound fails for full circles",
        "1.46 -2.19 -2.79 -2.74 -1.48 1.54 4.72 6.57 7.78 8.34 6.53 4.44",
        "5.59 5.17 2.55 -0.49 -2.08 -2.72 -2.04 -0.62 0.84 2.39 4.01 5.22",
    ),
    (
        "dodecagon-alternating",
        "convex 12-gon whose vertices alternate between maxima and minima",
        "1.78 1.24 0.37 1 1.32 1.82 2.48 3 3.36 3.45 3.32 2.44",
        "4.76 4.58 3.77 2.23 1.86 1.7 1.7 2 2.41 3.08 4.3 4.68",
    ),
    (
        "pentadecagon-tight",
        "15-gon attaining the cut bound, with one barely reflex vertex",
        "0.6 -0.98 -1.82 -1.85 -1.12 0.62 1.63 2.23 2.68 3.24 3.52 3.52 3.24 2.15 1.51",
        "5.12 4.08 2.39 0.52 -1.74 -3.44 -3.29 -2.53 -1.35 0.23 1.28 1.86 3.21 4.32 "
        "4.98",
    ),
    (
        "heptagon-evolute",
        "convex 7-gon with four concyclic vertices, so two centers coincide",
        "2 3 2 0 -2 -3 -2",
        "0 2 4 5 4 2 0",
    ),
    (
        "nonagon-evolute",
        "non-convex 9-gon with two collinear triples and a repeated center",
        "0 1 3 4 4 1 0 -1 -1",
        "1 2 1 1 5 3 5 4 2",
    ),
]


def _parse_value(text: str) -> FixtureValue:
    if "," in text:
        return tuple(int(part) for part in text.split(","))
    return int(text)


def load_fixtures(path: str = FIXTURES_PATH) -> Dict[str, Fixture]:
    """
    Parses a fixture file.

    Raises:
        PolygonFileError: If a line is malformed.
    """
    fixtures = {}
    with open(path, "r") as fixture_file:
        for line_number, line in enumerate(fixture_file, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            try:
                if len(fields) < 4 or fields[1] != "diagonal":
                    raise ValueError("expected '<id> diagonal <a> <b>'")
                diagonal = (int(fields[2]), int(fields[3]))
                expectations = {}
                for field in fields[4:]:
                    key, value = field.split("=")
                    expectations[key] = _parse_value(value)
            except ValueError as err:
                raise PolygonFileError(
                    f"Malformed fixture on line {line_number} of {path}: {err}"
                ) from err
            fixtures[fields[0]] = Fixture(fields[0], diagonal, expectations)
    return fixtures


def corpus() -> List[CorpusEntry]:
    """
    The six published example polygons, with their pinned fixtures.
    """
    fixtures = load_fixtures()
    return [
        CorpusEntry(
            id=entry_id,
            xs=tuple(xs.split()),
            ys=tuple(ys.split()),
            description=description,
            fixture=fixtures.get(entry_id),
        )
        for entry_id, description, xs, ys in _MATRICES
    ]


def get_entry(entry_id: str) -> CorpusEntry:
    """
    Looks up a corpus entry by id. A leading "corpus:" is ignored.

    Raises:
        CorpusEntryNotFoundError: If there is no such entry.
    """
    if entry_id.startswith(CORPUS_PREFIX):
        entry_id = entry_id[len(CORPUS_PREFIX) :]
    for entry in corpus():
        if entry.id == entry_id:
            return entry
    raise CorpusEntryNotFoundError(f"No corpus entry with id '{entry_id}'")


def observe(report: InequalityReport) -> Dict[str, FixtureValue]:
    """
    The values a fixture line can pin, read off an inequality report: each count of
    the parent, the same count of both parts (as "<count>_parts"), the slack of the
    cut inequality for each count (as "cut_slack_<count>") and the slack of the local
    cut inequality ("local_slack").
    """
    values: Dict[str, FixtureValue] = {}
    for quantity, count in report.counts.items():
        values[quantity] = count
        values[f"{quantity}_parts"] = tuple(
            part[quantity] for part in report.part_counts
        )
    for record in report.records:
        if record.name == "cut":
            values[f"cut_slack_{record.quantity}"] = record.slack
        elif record.name == "local-cut":
            values["local_slack"] = record.slack
    return values


def check_fixture(entry: CorpusEntry) -> Dict[str, Tuple[FixtureValue, FixtureValue]]:
    """
    Cuts the entry's polygon along its pinned diagonal and compares the observed values
    with the pinned ones.

    Returns:
        dict: (expected, observed) for every pinned key which does not match. Empty if
            the entry has no fixture or everything matches.
    """
    if entry.fixture is None:
        return {}
    decomposition = decompose(
        entry.polygon(), *entry.fixture.diagonal, require_convex_input=False
    )
    observed = observe(verify_inequalities(decomposition))
    mismatches = {}
    for key, expected in entry.fixture.expectations.items():
        if key not in observed:
            raise PolygonFileError(f"Fixture for {entry.id} pins unknown key '{key}'")
        if observed[key] != expected:
            mismatches[key] = (expected, observed[key])
    return mismatches
