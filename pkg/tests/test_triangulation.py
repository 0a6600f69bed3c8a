from collections import Counter

import numpy as np
from ddt import data, ddt, unpack

from py_four_vertex.exceptions import (
    FlipLimitExceededError,
    InvalidTriangulationError,
    NoBalancedDiagonalError,
    NotConvexError,
    NotGenericError,
)
from py_four_vertex.triangulation import (
    EdgeKind,
    Triangulation,
    anti_delaunay,
    balanced_diagonal,
    delaunay,
    edge_kind,
    enumerate_triangulations,
    fan_triangulation,
    has_empty_circle,
    has_full_circle,
    random_triangulation,
)

from .base import BaseTestCase
from .utils import (
    create_hexagon,
    create_nonconvex_pentagon,
    create_pentagon,
    create_square,
)


class TestTriangulation(BaseTestCase):
    def test_create_triangulation(self):
        triangulation = fan_triangulation(5)
        self.assertEqual(triangulation.diagonals, {(0, 2), (0, 3)})
        self.assertEqual(
            triangulation.triangles, {(0, 1, 2), (0, 2, 3), (0, 3, 4)}
        )
        self.assertIn((3, 0), triangulation)
        self.assertNotIn((1, 3), triangulation)
        self.assertNotIn("diagonal", triangulation)
        self.assertEqual(
            repr(triangulation), "<Triangulation n=5, diagonals=[(0, 2), (0, 3)]>"
        )

    def test_create_triangulation_errors(self):
        with self.assertRaises(InvalidTriangulationError):
            Triangulation(5, [(0, 2)])
        with self.assertRaises(InvalidTriangulationError) as context:
            Triangulation(5, [(0, 1), (0, 2)])
        self.assertEqual(context.exception.witness, (0, 1))
        with self.assertRaises(InvalidTriangulationError) as context:
            Triangulation(5, [(0, 2), (1, 3)])
        self.assertEqual(context.exception.witness, (0, 2, 1, 3))

    def test_sides(self):
        triangulation = fan_triangulation(6)
        self.assertEqual(triangulation.sides((0, 3)), (4, 4))
        self.assertEqual(triangulation.sides((4, 0)), (5, 3))

    def test_eq(self):
        self.assertEqual(
            fan_triangulation(6), Triangulation(6, [(0, 2), (0, 3), (4, 0)])
        )
        self.assertNotEqual(fan_triangulation(6), fan_triangulation(6, apex=1))
        with self.assertRaises(NotImplementedError):
            fan_triangulation(6) == "fan"

    def test_enumerate_triangulations(self):
        self.assertEqual(len(list(enumerate_triangulations(4))), 2)
        self.assertEqual(len(list(enumerate_triangulations(5))), 5)
        self.assertEqual(len(list(enumerate_triangulations(7))), 42)
        self.assertEqual(len(set(enumerate_triangulations(8))), 132)

    def test_random_triangulation(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            triangulation = random_triangulation(9, rng)
            self.assertEqual(len(triangulation.triangles), 7)

    def test_random_triangulation_is_uniform(self):
        rng = np.random.default_rng(0)
        counts = Counter(random_triangulation(5, rng) for _ in range(2000))
        self.assertEqual(len(counts), 5)
        for count in counts.values():
            self.assertGreater(count, 300)
            self.assertLess(count, 500)


class TestBalancedDiagonal(BaseTestCase):
    def test_balanced_diagonal(self):
        self.assertEqual(balanced_diagonal(fan_triangulation(8)), (0, 4))

    def test_every_large_triangulation_has_one(self):
        for n in (7, 8):
            for triangulation in enumerate_triangulations(n):
                diagonal = balanced_diagonal(triangulation)
                self.assertGreaterEqual(min(triangulation.sides(diagonal)), 4)

    def test_no_balanced_diagonal(self):
        snowflake = Triangulation(6, [(0, 2), (2, 4), (0, 4)])
        with self.assertRaises(NoBalancedDiagonalError):
            balanced_diagonal(snowflake)


@ddt
class TestDelaunay(BaseTestCase):
    def test_delaunay(self):
        polygon = create_hexagon()
        self.assertEqual(delaunay(polygon).diagonals, {(1, 5), (1, 4), (2, 4)})
        self.assertEqual(anti_delaunay(polygon).diagonals, {(0, 2), (0, 3), (0, 4)})
        self.assertEqual(delaunay(polygon).polygon, polygon)

        polygon = create_pentagon()
        self.assertEqual(delaunay(polygon).diagonals, {(1, 4), (1, 3)})
        self.assertEqual(anti_delaunay(polygon).diagonals, {(0, 2), (0, 3)})

    def test_order_does_not_matter(self):
        polygon = create_hexagon()
        for seed in range(5):
            rng = np.random.default_rng(seed)
            self.assertEqual(delaunay(polygon, rng=rng), delaunay(polygon))
            self.assertEqual(anti_delaunay(polygon, rng=rng), anti_delaunay(polygon))

    def test_delaunay_circles_are_empty(self):
        polygon = create_hexagon()
        for triangle in delaunay(polygon).triangles:
            for i, j in ((0, 1), (1, 2), (0, 2)):
                self.assertTrue(has_empty_circle(polygon, triangle[i], triangle[j]))
        for triangle in anti_delaunay(polygon).triangles:
            for i, j in ((0, 1), (1, 2), (0, 2)):
                self.assertTrue(has_full_circle(polygon, triangle[i], triangle[j]))

    def test_flip_limit(self):
        with self.assertRaises(FlipLimitExceededError):
            delaunay(create_hexagon(), max_flips=0)

    def test_preconditions(self):
        with self.assertRaises(NotConvexError):
            delaunay(create_nonconvex_pentagon())
        with self.assertRaises(NotGenericError):
            anti_delaunay(create_square())

    @data(
        ((0, 3), EdgeKind.ANTI_DELAUNAY, False, True),
        ((1, 4), EdgeKind.DELAUNAY, True, False),
        ((2, 5), EdgeKind.NEITHER, False, False),
        ((0, 1), EdgeKind.BOTH, True, True),
    )
    @unpack
    def test_edge_kind(self, edge, expected, empty, full):
        polygon = create_hexagon()
        self.assertEqual(edge_kind(polygon, *edge), expected)
        self.assertEqual(has_empty_circle(polygon, *edge), empty)
        self.assertEqual(has_full_circle(polygon, *edge), full)

    def test_edge_kind_errors(self):
        with self.assertRaises(InvalidTriangulationError):
            edge_kind(create_hexagon(), 2, 8)
