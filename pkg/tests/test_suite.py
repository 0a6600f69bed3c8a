import os

from ddt import data, ddt
from mock import patch

from py_four_vertex.exceptions import UnknownTagError
from py_four_vertex.extremality import Extremality
from py_four_vertex.predicates import CirclePosition
from py_four_vertex.suite import TAGS, SuiteConfig, run_suite
from py_four_vertex.triangulation import _cached_flip

from .base import BaseTestCase

SMALL = SuiteConfig(n_range=(4, 7), count=3, seed=1, include_corpus=False)


@ddt
class TestSuite(BaseTestCase):
    @data(
        "bose-identities",
        "four-vertex-global",
        "four-vertex-local",
        "four-vertex-radial",
        "local-equals-radial",
        "global-implies-local",
        "vertex-removal-local",
        "evolute-identity",
        "evolute-equidistant",
        "triangulation-unique",
        "halfplane-exchange",
        "balanced-diagonal",
        "decomposition-cut",
        "decomposition-proof",
    )
    def test_tag_passes(self, tag):
        report = run_suite([tag], SMALL)
        result = report.results[tag]
        self.assertTrue(result.ok, result.counterexamples)
        self.assertGreater(result.passed, 0)

    def test_corpus_fixtures(self):
        config = SMALL._replace(include_corpus=True)
        result = run_suite(["corpus-fixtures"], config).results["corpus-fixtures"]
        self.assertEqual(result.passed, 1)

        # Skipped without the corpus
        result = run_suite(["corpus-fixtures"], SMALL).results["corpus-fixtures"]
        self.assertEqual(result.skipped, 1)
        self.assertEqual(result.passed, 0)

    def test_small_polygons_are_skipped(self):
        config = SMALL._replace(n_range=(4, 5))
        result = run_suite(["decomposition-cut"], config).results["decomposition-cut"]
        self.assertEqual(result.passed, 0)
        self.assertEqual(result.skipped, 3)

    def test_unknown_tag(self):
        with self.assertRaises(UnknownTagError):
            run_suite(["bose-identities", "no-such-tag"], SMALL)

    def test_report(self):
        report = run_suite(["four-vertex-global", "bose-identities"], SMALL)
        self.assertTrue(report.ok)
        self.assertEqual(report.failed_tags, [])
        result = report.to_dict()
        self.assertEqual(
            result["config"],
            {"n_range": [4, 7], "count": 3, "seed": 1, "include_corpus": False},
        )
        self.assertEqual(
            list(result["tags"]), ["bose-identities", "four-vertex-global"]
        )
        self.assertEqual(result["tags"]["bose-identities"]["failed"], 0)

    def test_every_tag_is_registered(self):
        self.assertEqual(len(TAGS), 31)
        for name, tag in TAGS.items():
            self.assertEqual(tag.name, name)

    def test_seed_from_environment(self):
        with patch.dict(os.environ, {"FOURVERTEX_SEED": "5"}):
            report = run_suite(["four-vertex-global"], SMALL._replace(seed=None))
        self.assertEqual(report.config.seed, 5)

    @patch("py_four_vertex.extremality.in_circle")
    def test_broken_predicate_is_caught(self, in_circle_mock):
        in_circle_mock.return_value = CirclePosition.OUTSIDE
        report = run_suite(["bose-identities"], SMALL)
        self.assertFalse(report.ok)
        self.assertEqual(report.failed_tags, ["bose-identities"])
        result = report.results["bose-identities"]
        self.assertEqual(result.failed, 3)
        counterexample = result.counterexamples[0]
        self.assertEqual(counterexample.tag, "bose-identities")
        self.assertTrue(counterexample.name.startswith("convex-generic-n4-seed"))
        self.assertEqual(len(counterexample.vertices), 4)

    @patch("py_four_vertex.suite.local_labels")
    def test_local_removal_checks_each_neighbour(self, local_labels_mock):
        # Pentagons keep two maxima. Removing vertex 0 makes vertex 2 a maximum, so
        # the count bound holds but vertex 2 was not a maximum before.
        def labels(polygon, *args, **kwargs):
            if polygon.n == 5:
                return [Extremality.MAX] * 2 + [Extremality.MIN] * 3
            return [
                Extremality.MAX if parent == 2 else Extremality.MIN
                for parent in polygon.parent_indices
            ]

        local_labels_mock.side_effect = labels
        config = SMALL._replace(n_range=(5, 5))
        report = run_suite(["vertex-removal-local"], config)
        result = report.results["vertex-removal-local"]
        self.assertEqual(result.failed, 3)
        self.assertEqual(
            result.counterexamples[0].message,
            "Vertex 2 is a local maximum after removing vertex 0, but not before",
        )

    @patch("py_four_vertex.predicates.in_circle")
    def test_errors_in_a_check_are_failures(self, in_circle_mock):
        in_circle_mock.return_value = CirclePosition.INSIDE
        _cached_flip.cache_clear()
        self.addCleanup(_cached_flip.cache_clear)

        report = run_suite(["triangulation-circles", "bose-identities"], SMALL)
        self.assertEqual(report.failed_tags, ["triangulation-circles"])
        result = report.results["triangulation-circles"]
        self.assertEqual(result.failed, 3)
        self.assertTrue(
            result.counterexamples[0].message.startswith("FlipLimitExceededError")
        )
        self.assertTrue(report.results["bose-identities"].ok)
