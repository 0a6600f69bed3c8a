import json
import os
import tempfile
from io import StringIO

from ddt import data, ddt, unpack
from mock import patch

from py_four_vertex.cli import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_SUITE_FAILURE,
    main,
)
from py_four_vertex.predicates import CirclePosition

from .base import BaseTestCase

DATA_PATH = os.path.join(os.path.dirname(__file__), "data", "polygons")
QUADRILATERAL = os.path.join(DATA_PATH, "quadrilateral.csv")
HEXAGON = os.path.join(DATA_PATH, "hexagon.csv")
SQUARE = os.path.join(DATA_PATH, "square.json")


@ddt
class TestCLI(BaseTestCase):
    def run_cli(self, *argv):
        with patch("sys.stdout", new_callable=StringIO) as stdout, patch(
            "sys.stderr", new_callable=StringIO
        ) as stderr:
            status = main(list(argv))
        return status, stdout.getvalue(), stderr.getvalue()

    def run_json(self, *argv):
        status, out, err = self.run_cli(*argv)
        self.assertEqual(status, EXIT_OK, err)
        return json.loads(out)

    def test_analyze(self):
        result = self.run_json("analyze", QUADRILATERAL)
        self.assertEqual(result["labels"]["global"], ["min", "max", "min", "max"])
        self.assertEqual(result["counts"]["s_minus"], 2)

        result = self.run_json("analyze", "corpus:hexagon-radial")
        self.assertEqual(result["counts"]["r_minus"], 3)
        self.assertEqual(result["counts"]["r_plus"], 3)
        self.assertEqual(result["counts"]["l_minus"], 2)
        self.assertFalse(result["predicates"]["coherent"])

    def test_analyze_strict(self):
        result = self.run_json("analyze", HEXAGON, "--strict")
        self.assertEqual(result["counts"]["u_minus"], 2)

        status, _, err = self.run_cli("analyze", SQUARE, "--strict")
        self.assertEqual(status, EXIT_PRECONDITION)
        self.assertIn("witness: 0, 1, 2, 3", err)

        # Without --strict, undefined labels are null
        result = self.run_json("analyze", SQUARE)
        self.assertEqual(result["labels"]["global"], [None] * 4)

    def test_analyze_format(self):
        status, _, _ = self.run_cli("analyze", SQUARE, "--format=xml")
        self.assertEqual(status, EXIT_INPUT_ERROR)
        result = self.run_json("analyze", SQUARE, "--format=JSON")
        self.assertEqual(result["n"], 4)

    def test_keep_orientation(self):
        path = os.path.join(DATA_PATH, "clockwise.csv")
        self.assertTrue(self.run_json("analyze", path)["reversed_on_load"])
        result = self.run_json("analyze", path, "--keep-orientation")
        self.assertFalse(result["reversed_on_load"])
        self.assertFalse(result["predicates"]["ccw"])

    def test_evolute(self):
        result = self.run_json("evolute", QUADRILATERAL)
        self.assertEqual(result["winding_e"], -1)
        self.assertEqual(result["cusps"], [0, 1, 2, 3])

        result = self.run_json("evolute", SQUARE)
        self.assertIsNone(result["winding_e"])
        status, _, _ = self.run_cli("evolute", SQUARE, "--winding")
        self.assertEqual(status, EXIT_PRECONDITION)

    def test_evolute_svg(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "evolute.svg")
            self.run_json("evolute", HEXAGON, f"--svg={path}")
            with open(path) as svg_file:
                self.assertIn('id="evolute-edge-0"', svg_file.read())

    def test_decompose(self):
        result = self.run_json("decompose", HEXAGON, "--diagonal", "0", "3")
        self.assertEqual(result["parts"], [[0, 1, 2, 3], [3, 4, 5, 0]])
        self.assertTrue(result["holds"])

        result = self.run_json(
            "decompose", "corpus:dodecagon-split", "--diagonal", "0", "5"
        )
        self.assertEqual(result["counts"]["s_minus"], 3)
        self.assertEqual(result["counts"]["s_plus"], 5)

    def test_decompose_nonconvex(self):
        result = self.run_json(
            "decompose", "corpus:pentadecagon-tight", "--diagonal", "0", "4"
        )
        self.assertFalse(any(record["applicable"] for record in result["records"]))
        self.assertIsNone(result["edge_kind"])

    def test_decompose_audit_and_proof(self):
        result = self.run_json("decompose", HEXAGON, "--audit")
        self.assertEqual(len(result["reports"]), 3)
        result = self.run_json("decompose", HEXAGON, "--proof")
        self.assertEqual(result["s_bound"], 4)
        self.assertEqual(result["depth"], 1)

    @data(
        (("--diagonal", "0", "1"), EXIT_PRECONDITION),
        (("--diagonal", "0", "2"), EXIT_PRECONDITION),
        (("--diagonal", "zero", "3"), EXIT_INPUT_ERROR),
    )
    @unpack
    def test_decompose_errors(self, options, expected):
        status, _, _ = self.run_cli("decompose", HEXAGON, *options)
        self.assertEqual(status, expected)

    def test_fuzz(self):
        status, out, _ = self.run_cli(
            "fuzz",
            "--tags=four-vertex-global,bose-identities",
            "--n=4..6",
            "--count=2",
            "--seed=3",
            "--no-corpus",
        )
        self.assertEqual(status, EXIT_OK)
        result = json.loads(out)
        self.assertTrue(result["ok"])
        self.assertEqual(result["config"]["seed"], 3)
        self.assertEqual(set(result["tags"]), {"four-vertex-global", "bose-identities"})

    @patch("py_four_vertex.extremality.in_circle")
    def test_fuzz_failure(self, in_circle_mock):
        in_circle_mock.return_value = CirclePosition.OUTSIDE
        status, out, _ = self.run_cli(
            "fuzz", "--tags=bose-identities", "--n=4..5", "--count=2", "--no-corpus"
        )
        self.assertEqual(status, EXIT_SUITE_FAILURE)
        self.assertFalse(json.loads(out)["ok"])

    @data(
        ("--tags=no-such-tag",),
        ("--n=6..4",),
        ("--n=four",),
        ("--count=many",),
    )
    def test_fuzz_errors(self, options):
        status, _, _ = self.run_cli("fuzz", "--no-corpus", *options)
        self.assertEqual(status, EXIT_INPUT_ERROR)

    def test_sample(self):
        status, out, _ = self.run_cli("sample", "ellipse", "-m", "8")
        self.assertEqual(status, EXIT_OK)
        xs, ys = out.splitlines()
        self.assertEqual(xs.split(",")[0], "1")
        self.assertEqual(ys.split(",")[2], "0.63")

        status, out, _ = self.run_cli("sample", "ellipse", "--param=b=0.5", "-m", "8")
        self.assertEqual(out.splitlines()[1].split(",")[2], "0.5")

    @data(
        (("spiral",), EXIT_PRECONDITION),
        (("ellipse", "--param=c=1"), EXIT_PRECONDITION),
        (("ellipse", "--param=b"), EXIT_INPUT_ERROR),
        (("ellipse", "-m", "4"), EXIT_PRECONDITION),
    )
    @unpack
    def test_sample_errors(self, arguments, expected):
        status, _, _ = self.run_cli("sample", *arguments)
        self.assertEqual(status, expected)

    def test_render(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "out.svg")
            status, _, _ = self.run_cli(
                "render", HEXAGON, f"--out={path}", "--circles", "--no-evolute"
            )
            self.assertEqual(status, EXIT_OK)
            with open(path) as svg_file:
                svg = svg_file.read()
        self.assertIn('id="circle-0"', svg)
        self.assertNotIn('id="evolute-edge-0"', svg)

    def test_corpus(self):
        status, out, _ = self.run_cli("corpus")
        self.assertEqual(status, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(len(lines), 6)
        self.assertTrue(lines[0].startswith("corpus:hexagon-radial\t6\t"))

        status, out, _ = self.run_cli("corpus", "heptagon-evolute")
        self.assertEqual(out, "2,3,2,0,-2,-3,-2\n0,2,4,5,4,2,0\n")

        status, _, _ = self.run_cli("corpus", "no-such-polygon")
        self.assertEqual(status, EXIT_INPUT_ERROR)

    @data(
        (),
        ("analyze",),
        ("frobnicate", "polygon.csv"),
        ("decompose", "polygon.csv"),
    )
    def test_usage_errors(self, argv):
        status, _, err = self.run_cli(*argv)
        self.assertEqual(status, EXIT_INPUT_ERROR)
        self.assertIn("Usage:", err)

    def test_missing_file(self):
        status, _, err = self.run_cli("analyze", os.path.join(DATA_PATH, "nope.csv"))
        self.assertEqual(status, EXIT_INPUT_ERROR)
        self.assertIn("error:", err)
