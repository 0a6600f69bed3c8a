from ddt import data, ddt, unpack
from mock import patch

from py_four_vertex.exceptions import (
    NotConvexError,
    NotGenericError,
    OnCircleWitnessError,
    PreconditionError,
    RadiusTieError,
    TooFewVerticesError,
)
from py_four_vertex.extremality import (
    Adjacency,
    BoseCounts,
    Containment,
    CurvatureConvention,
    CurvatureRelation,
    Extremality,
    VertexSign,
    adjacency,
    analyze,
    bose_counts,
    classify_circle,
    curvature_compare,
    extremal_indices,
    global_labels,
    local_labels,
    radial_extremality,
    radial_labels,
    remove_vertex,
    vertex_sign,
)
from py_four_vertex.predicates import CirclePosition

from .base import BaseTestCase
from .utils import (
    create_hexagon,
    create_nonconvex_pentagon,
    create_pentagon,
    create_polygon,
    create_quadrilateral,
    create_square,
)


@ddt
class TestExtremality(BaseTestCase):
    @data(
        (4, (0, 1, 2), Adjacency.NEIGHBORING),
        (5, (0, 2, 3), Adjacency.INTERMEDIATE),
        (6, (0, 1, 3), Adjacency.INTERMEDIATE),
        (6, (0, 2, 4), Adjacency.DISJOINT),
        (6, (5, 0, 1), Adjacency.NEIGHBORING),
    )
    @unpack
    def test_adjacency(self, n, triple, expected):
        self.assertEqual(adjacency(n, *triple), expected)

    def test_opposite(self):
        self.assertEqual(Extremality.MAX.opposite, Extremality.MIN)
        self.assertEqual(Extremality.MIN.opposite, Extremality.MAX)
        self.assertEqual(Extremality.NONE.opposite, Extremality.NONE)

    def test_vertex_sign(self):
        polygon = create_nonconvex_pentagon()
        signs = [vertex_sign(polygon, index) for index in range(polygon.n)]
        self.assertEqual(signs.count(VertexSign.NEGATIVE), 1)
        self.assertEqual(signs[3], VertexSign.NEGATIVE)

    def test_curvature_compare(self):
        polygon = create_quadrilateral()
        self.assertEqual(curvature_compare(polygon, 0), CurvatureRelation.LESS)
        self.assertEqual(curvature_compare(polygon, 1), CurvatureRelation.GREATER)

    def test_curvature_conventions(self):
        # Conventions only differ at negative vertices
        polygon = create_hexagon()
        for index in range(polygon.n):
            self.assertEqual(
                curvature_compare(polygon, index, CurvatureConvention.SWAP_RELATION),
                curvature_compare(polygon, index, CurvatureConvention.SWAP_BOTH),
            )
        polygon = create_nonconvex_pentagon()
        self.assertNotEqual(
            curvature_compare(polygon, 3, CurvatureConvention.SWAP_RELATION),
            curvature_compare(polygon, 3, CurvatureConvention.SWAP_BOTH),
        )

    @data(
        (
            create_quadrilateral,
            ["min", "max", "min", "max"],
            ["max", "min", "max", "min"],
        ),
        (
            create_pentagon,
            ["max", "min", "max", "none", "min"],
            ["min", "max", "min", "none", "max"],
        ),
        (
            create_hexagon,
            ["max", "min", "none", "max", "none", "min"],
            ["min", "max", "none", "min", "none", "max"],
        ),
    )
    @unpack
    def test_convex_labels(self, factory, expected, expected_radial):
        polygon = factory()
        self.assert_labels_equal(global_labels(polygon), expected)
        self.assert_labels_equal(local_labels(polygon), expected)
        self.assert_labels_equal(radial_labels(polygon), expected_radial)
        # Radial labels are the opposite of the local ones on coherent polygons
        self.assertEqual(
            radial_labels(polygon), [label.opposite for label in local_labels(polygon)]
        )

    def test_nonconvex_labels(self):
        polygon = create_nonconvex_pentagon()
        self.assert_labels_equal(
            global_labels(polygon), ["min", "none", "max", "max", "max"]
        )
        self.assert_labels_equal(
            local_labels(polygon), ["min", "none", "none", "max", "none"]
        )
        self.assert_labels_equal(
            radial_labels(polygon), ["max", "none", "min", "max", "min"]
        )

    def test_square(self):
        polygon = create_square()
        with self.assertRaises(OnCircleWitnessError):
            global_labels(polygon)
        self.assert_labels_equal(
            global_labels(polygon, strict=False), [None, None, None, None]
        )

        with self.assertRaises(RadiusTieError) as context:
            radial_extremality(polygon, 0)
        self.assertEqual(context.exception.witness, (3, 0))
        self.assertEqual(
            radial_extremality(polygon, 0, lenient=True), Extremality.NONE
        )

    def test_lenient_radii_tie(self):
        # R_1 = R_2 sit between the larger R_0 and R_3, so both ends of the tie are
        # minima
        polygon = create_polygon([(0, 0), (4, 0), (4, 4), (0, 4), (-1, 2)])
        with self.assertRaises(RadiusTieError):
            radial_labels(polygon)
        labels = radial_labels(polygon, lenient=True)
        self.assert_labels_equal(labels, ["max", "min", "min", "max", "min"])

    def test_too_few_vertices(self):
        triangle = create_polygon([(0, 0), (1, 0), (0, 1)])
        with self.assertRaises(TooFewVerticesError):
            local_labels(triangle)
        with self.assertRaises(TooFewVerticesError):
            analyze(triangle)
        with self.assertRaises(TooFewVerticesError):
            remove_vertex(triangle, 0)
        # Every circle through a triangle is vacuously empty
        self.assertEqual(
            classify_circle(triangle, 0, 1, 2).containment, Containment.EMPTY
        )

    def test_classify_circle(self):
        polygon = create_hexagon()
        classification = classify_circle(polygon, 5, 0, 1)
        self.assertEqual(classification.containment, Containment.EMPTY)
        self.assertEqual(classification.adjacency, Adjacency.NEIGHBORING)
        self.assertEqual(
            classify_circle(polygon, 0, 1, 2).containment, Containment.FULL
        )
        with self.assertRaises(PreconditionError):
            classify_circle(polygon, 0, 0, 1)

    @patch("py_four_vertex.extremality.in_circle")
    def test_global_labels_use_in_circle(self, in_circle_mock):
        in_circle_mock.return_value = CirclePosition.OUTSIDE
        labels = global_labels(create_hexagon())
        self.assert_labels_equal(labels, ["max"] * 6)
        self.assertTrue(in_circle_mock.called)

    def test_extremal_indices(self):
        labels = global_labels(create_hexagon())
        self.assertEqual(extremal_indices(labels), [0, 1, 3, 5])


@ddt
class TestBoseCounts(BaseTestCase):
    @data(
        (create_quadrilateral, BoseCounts(2, 2, 0, 0, 0, 0)),
        (create_pentagon, BoseCounts(2, 2, 0, 0, 1, 1)),
        (create_hexagon, BoseCounts(2, 2, 0, 0, 2, 2)),
    )
    @unpack
    def test_bose_counts(self, factory, expected):
        polygon = factory()
        counts = bose_counts(polygon)
        self.assertEqual(counts, expected)
        self.assertEqual(counts.difference_residuals(), (0, 0))
        self.assertEqual(counts.sum_residuals(polygon.n), (0, 0))

    def test_bose_counts_preconditions(self):
        with self.assertRaises(NotConvexError) as context:
            bose_counts(create_nonconvex_pentagon())
        self.assertEqual(context.exception.witness, (2, 3, 4))
        with self.assertRaises(NotGenericError) as context:
            bose_counts(create_square())
        self.assertEqual(context.exception.witness, (0, 1, 2, 3))


class TestAnalyze(BaseTestCase):
    def test_analyze(self):
        report = analyze(create_pentagon())
        self.assertEqual(report.n, 5)
        self.assertEqual(report.bose, BoseCounts(2, 2, 0, 0, 1, 1))
        self.assertEqual(
            report.counts(),
            {
                "s_plus": 2,
                "s_minus": 2,
                "t_plus": 0,
                "t_minus": 0,
                "u_plus": 1,
                "u_minus": 1,
                "l_plus": 2,
                "l_minus": 2,
                "r_plus": 2,
                "r_minus": 2,
            },
        )
        self.assertEqual(report.signs, [VertexSign.POSITIVE] * 5)

    def test_analyze_nonconvex(self):
        report = analyze(create_nonconvex_pentagon())
        self.assertIsNone(report.bose)
        self.assertIsNone(report.t_plus)
        self.assertEqual(report.s_minus, 3)
        self.assertEqual(report.s_plus, 1)
        self.assertEqual(report.l_minus, 1)
        self.assertEqual(report.l_plus, 1)
        self.assertEqual(report.signs[3], VertexSign.NEGATIVE)

    def test_analyze_not_generic(self):
        with self.assertRaises(NotGenericError):
            analyze(create_square())

    def test_repr(self):
        self.assertEqual(
            repr(analyze(create_quadrilateral())),
            "<ExtremalityReport n=4, s=(2, 2), l=(2, 2), r=(2, 2)>",
        )


class TestRemoveVertex(BaseTestCase):
    def test_remove_vertex(self):
        polygon = remove_vertex(create_hexagon(), 0)
        self.assertEqual(polygon.n, 5)
        self.assertEqual(polygon.parent_indices, (1, 2, 3, 4, 5))
        polygon = remove_vertex(create_hexagon(), -1)
        self.assertEqual(polygon.parent_indices, (0, 1, 2, 3, 4))
