import os
from fractions import Fraction

from ddt import data, ddt
from hypothesis import given, settings
from hypothesis import strategies as st
from mock import patch

from py_four_vertex.exceptions import (
    PreconditionError,
    RejectionBudgetExceededError,
    TooFewVerticesError,
)
from py_four_vertex.generators import (
    DEFAULT_SEED,
    GeneratorConfig,
    GeneratorKind,
    default_seed,
    generate,
    generate_many,
)

from .base import BaseTestCase


@ddt
class TestGenerate(BaseTestCase):
    @data(*GeneratorKind)
    def test_deterministic(self, kind):
        config = GeneratorConfig(n=7, seed=42, kind=kind)
        self.assertEqual(generate(config), generate(config))

    def test_different_seeds(self):
        first = generate(GeneratorConfig(n=7, seed=1))
        self.assertNotEqual(first, generate(GeneratorConfig(n=7, seed=2)))

    @data(4, 5, 8, 12)
    def test_convex_generic(self, n):
        polygon = generate(GeneratorConfig(n=n, seed=3))
        self.assertEqual(polygon.n, n)
        self.assertTrue(polygon.is_convex())
        self.assertTrue(polygon.predicates.generic)
        self.assertFalse(polygon.reversed_on_load)
        for point in polygon:
            self.assertEqual((10 ** 6) % point.x.denominator, 0)
            self.assertEqual((10 ** 6) % point.y.denominator, 0)

    def test_convex_generic_coherent(self):
        config = GeneratorConfig(
            n=9, seed=5, kind=GeneratorKind.CONVEX_GENERIC_COHERENT
        )
        predicates = generate(config).predicates
        self.assertTrue(predicates.convex)
        self.assertTrue(predicates.generic)
        self.assertTrue(predicates.coherent)

    def test_simple_nonconvex(self):
        config = GeneratorConfig(n=10, seed=5, kind=GeneratorKind.SIMPLE_NONCONVEX)
        predicates = generate(config).predicates
        self.assertTrue(predicates.simple)
        self.assertTrue(predicates.generic)

    def test_perturbation(self):
        polygon = generate(
            GeneratorConfig(n=6, seed=11, perturbation=Fraction(1, 10), digits=3)
        )
        for point in polygon:
            self.assertEqual(1000 % point.x.denominator, 0)
            radius_sq = point.x ** 2 + point.y ** 2
            self.assertGreater(radius_sq, Fraction(8, 10) ** 2)
            self.assertLess(radius_sq, Fraction(12, 10) ** 2)

    def test_errors(self):
        with self.assertRaises(TooFewVerticesError):
            generate(GeneratorConfig(n=2, seed=1))
        with self.assertRaises(RejectionBudgetExceededError):
            generate(GeneratorConfig(n=6, seed=1, rejection_budget=0))

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(min_value=4, max_value=9),
        st.integers(min_value=0, max_value=2 ** 32),
    )
    def test_always_convex_and_generic(self, n, seed):
        polygon = generate(GeneratorConfig(n=n, seed=seed))
        self.assertTrue(polygon.is_convex())
        self.assertTrue(polygon.predicates.generic)


class TestGenerateMany(BaseTestCase):
    def test_generate_many(self):
        results = list(generate_many(GeneratorKind.CONVEX_GENERIC, (4, 6), 6, 100))
        self.assertEqual([config.n for config, _ in results], [4, 5, 6, 4, 5, 6])
        self.assertEqual(
            [config.seed for config, _ in results], list(range(100, 106))
        )
        config, polygon = results[0]
        self.assertEqual(polygon, generate(config))

    @patch("py_four_vertex.generators.generate")
    def test_generate_many_skips_failures(self, generate_mock):
        generate_mock.side_effect = RejectionBudgetExceededError("no polygon")
        self.assertEqual(
            list(generate_many(GeneratorKind.CONVEX_GENERIC, (4, 4), 3, 0)), []
        )
        self.assertEqual(generate_mock.call_count, 3)


class TestDefaultSeed(BaseTestCase):
    def test_default_seed(self):
        with patch.dict(os.environ, {"FOURVERTEX_SEED": "17"}):
            self.assertEqual(default_seed(), 17)
        with patch.dict(os.environ, {"FOURVERTEX_SEED": "seventeen"}):
            with self.assertRaises(PreconditionError):
                default_seed()
        with patch.dict(os.environ, {}, clear=True):
            self.assertEqual(default_seed(), DEFAULT_SEED)
