"""
Four-vertex toolkit for polygons with exact coordinates.

Usage:
  fourvertex analyze <polygon> [options]
  fourvertex evolute <polygon> [options]
  fourvertex decompose <polygon> (--diagonal <a> <b> | --audit | --proof) [options]
  fourvertex fuzz [options]
  fourvertex sample <kind> [--param=<param>...] [options]
  fourvertex render <polygon> [options]
  fourvertex corpus [<id>] [options]
  fourvertex (-h | --help)

Polygons are read from a CSV file (a row of x coordinates, then a row of y
coordinates) or a JSON file (a list of [x, y] pairs). Use corpus:<id> instead of a
path to read a published example, see `fourvertex corpus`.

Options:
  -h --help            Show this screen.
  --format=<format>    Polygon file format, csv or json. Default: by extension.
  --keep-orientation   Do not reverse clockwise input.
  --strict             Fail, rather than reporting null, where a label is undefined.
  --lenient-radii      Resolve equal neighbouring radii with non-strict comparisons.
  --winding            Fail if the evolute's winding number is undefined.
  --svg=<path>         Also draw the polygon and its evolute to this SVG file.
  --n=<range>          Range of generated polygon sizes [default: 4..12].
  --count=<count>      Polygons of each generated kind [default: 50].
  --seed=<seed>        Base seed. Default: $FOURVERTEX_SEED, or a fixed seed.
  --tags=<tags>        Comma separated suite tags. Default: all of them.
  --no-corpus          Do not add the published examples to the suite.
  --param=<param>      Curve parameter as name=value, for example b=0.63.
  -m <m>               Number of samples [default: 64].
  --out=<path>         Output file. Default: standard output, or polygon.svg.
  --size=<px>          Canvas size in pixels [default: 600].
  --proof              Print an inductive four-vertex certificate.
  --no-evolute         Do not draw the evolute.
  --circles            Draw the neighbouring circles.
  --labels             Write vertex indices.
  -v --verbose         Log debug messages.
  -q --quiet           Only log errors.

Exit status:
  0 on success, 1 if a suite tag fails, 2 if the input cannot be read, 3 if the
  polygon violates a precondition of the requested operation.
"""
from typing import Any, Dict, List, Optional, Tuple

import json
import logging
import sys

from docopt import DocoptExit, docopt

from .components import Polygon
from .corpus import CORPUS_PREFIX, corpus, get_entry
from .decomposition import (
    audit_all_diagonals,
    decompose,
    four_vertex_via_decomposition,
    verify_inequalities,
)
from .evolute import evolute, winding_number
from .exceptions import InputError, PreconditionError
from .extremality import analyze
from .loaders import PolygonFormat, dump, dump_file, load_file
from .reports import (
    analysis_report,
    audit_report,
    certificate_report,
    decomposition_report,
    evolute_report,
)
from .sampling import sample_parametric
from .suite import SuiteConfig, run_suite
from .visualise import RenderSpec, render

logger = logging.getLogger("FourVertex")

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3

COMMANDS = ("analyze", "evolute", "decompose", "fuzz", "sample", "render", "corpus")


def _integer(arguments: Dict[str, Any], name: str) -> int:
    try:
        return int(arguments[name])
    except ValueError as err:
        raise InputError(f"{name} must be an integer, got '{arguments[name]}'") from err


def _range(value: str) -> Tuple[int, int]:
    try:
        low, high = (int(part) for part in value.split("..", 1))
    except ValueError as err:
        raise InputError(f"--n must look like 4..12, got '{value}'") from err
    if low > high:
        raise InputError(f"--n range {value} is empty")
    return low, high


def _params(values: List[str]) -> Dict[str, float]:
    params = {}
    for value in values:
        name, _, number = value.partition("=")
        try:
            params[name] = float(number)
        except ValueError as err:
            raise InputError(
                f"--param must look like name=value, got '{value}'"
            ) from err
    return params


def read_polygon(arguments: Dict[str, Any]) -> Polygon:
    """
    Reads the <polygon> argument, a file path or a corpus id.
    """
    source = arguments["<polygon>"]
    if source.startswith(CORPUS_PREFIX):
        return get_entry(source).polygon()
    polygon_format = None
    if arguments["--format"]:
        try:
            polygon_format = PolygonFormat(arguments["--format"].lower())
        except ValueError as err:
            raise InputError(f"Unknown format '{arguments['--format']}'") from err
    return load_file(
        source,
        polygon_format=polygon_format,
        normalise_orientation=not arguments["--keep-orientation"],
    )


def _write_json(data: Any, out: Optional[str] = None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as out_file:
            out_file.write(text + "\n")
    else:
        print(text)


def cmd_analyze(arguments: Dict[str, Any]) -> int:
    polygon = read_polygon(arguments)
    report = None
    if arguments["--strict"]:
        report = analyze(polygon, lenient_radii=arguments["--lenient-radii"])
    _write_json(analysis_report(polygon, report))
    return EXIT_OK


def cmd_evolute(arguments: Dict[str, Any]) -> int:
    polygon = read_polygon(arguments)
    result = evolute_report(polygon)
    if arguments["--winding"] and result["winding_e"] is None:
        # Raises the reason the winding number is undefined.
        winding_number(evolute(polygon))
    _write_json(result)
    if arguments["--svg"]:
        render(polygon, RenderSpec(), arguments["--svg"])
    return EXIT_OK


def cmd_decompose(arguments: Dict[str, Any]) -> int:
    # Cuts of non-convex polygons are reported with applicable=false.
    polygon = read_polygon(arguments)
    if arguments["--proof"]:
        _write_json(certificate_report(four_vertex_via_decomposition(polygon)))
    elif arguments["--audit"]:
        summary = audit_all_diagonals(polygon, require_convex_input=False)
        _write_json(audit_report(summary))
    else:
        decomposition = decompose(
            polygon,
            _integer(arguments, "<a>"),
            _integer(arguments, "<b>"),
            require_convex_input=False,
        )
        _write_json(
            decomposition_report(decomposition, verify_inequalities(decomposition))
        )
    return EXIT_OK


def cmd_fuzz(arguments: Dict[str, Any]) -> int:
    config = SuiteConfig(
        n_range=_range(arguments["--n"]),
        count=_integer(arguments, "--count"),
        seed=_integer(arguments, "--seed") if arguments["--seed"] else None,
        include_corpus=not arguments["--no-corpus"],
    )
    tags = arguments["--tags"].split(",") if arguments["--tags"] else None
    report = run_suite(tags, config)
    _write_json(report.to_dict(), arguments["--out"])
    if not report.ok:
        logger.error(f"Failed tags: {', '.join(report.failed_tags)}")
        return EXIT_SUITE_FAILURE
    return EXIT_OK


def cmd_sample(arguments: Dict[str, Any]) -> int:
    polygon = sample_parametric(
        arguments["<kind>"], _params(arguments["--param"]), _integer(arguments, "-m")
    )
    if arguments["--out"]:
        dump_file(polygon, arguments["--out"])
    else:
        dump(polygon, sys.stdout)
    return EXIT_OK


def cmd_render(arguments: Dict[str, Any]) -> int:
    polygon = read_polygon(arguments)
    spec = RenderSpec(
        size=_integer(arguments, "--size"),
        show_evolute=not arguments["--no-evolute"],
        show_circles=arguments["--circles"],
        label_vertices=arguments["--labels"],
    )
    render(polygon, spec, arguments["--out"] or "polygon.svg")
    return EXIT_OK


def cmd_corpus(arguments: Dict[str, Any]) -> int:
    if arguments["<id>"] is None:
        for entry in corpus():
            print(f"{CORPUS_PREFIX}{entry.id}\t{entry.n}\t{entry.description}")
        return EXIT_OK
    polygon = get_entry(arguments["<id>"]).polygon()
    if arguments["--out"]:
        dump_file(polygon, arguments["--out"])
    else:
        dump(polygon, sys.stdout)
    return EXIT_OK


HANDLERS = {
    "analyze": cmd_analyze,
    "evolute": cmd_evolute,
    "decompose": cmd_decompose,
    "fuzz": cmd_fuzz,
    "sample": cmd_sample,
    "render": cmd_render,
    "corpus": cmd_corpus,
}


def _configure_logging(arguments: Dict[str, Any]) -> None:
    level = logging.WARNING
    if arguments["--verbose"]:
        level = logging.DEBUG
    elif arguments["--quiet"]:
        level = logging.ERROR
    logging.basicConfig(format="%(levelname)s: %(message)s", level=level)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs the command line interface and returns the exit status.
    """
    try:
        arguments = docopt(__doc__, argv=argv)
    except DocoptExit as err:
        print(err, file=sys.stderr)
        return EXIT_INPUT_ERROR
    _configure_logging(arguments)

    command = next(name for name in COMMANDS if arguments[name])
    try:
        return HANDLERS[command](arguments)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except PreconditionError as err:
        message = f"precondition failed: {err}"
        if err.witness:
            message += f" (witness: {', '.join(str(i) for i in err.witness)})"
        print(message, file=sys.stderr)
        return EXIT_PRECONDITION


def run() -> None:
    sys.exit(main())

