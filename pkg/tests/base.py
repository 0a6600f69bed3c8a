from typing import List, Optional, Sequence

import logging
from unittest import TestCase

from py_four_vertex.components import Polygon
from py_four_vertex.extremality import Extremality, Labels

# Turn off debug spam from matplotlib, and warnings which tests trigger on purpose
logging.getLogger("matplotlib").setLevel(logging.WARNING)
logging.getLogger("FourVertex").setLevel(logging.ERROR)

LABELS = {
    "max": Extremality.MAX,
    "min": Extremality.MIN,
    "none": Extremality.NONE,
    None: None,
}


class BaseTestCase(TestCase):
    # Helper functions
    def assert_labels_equal(
        self, labels: Labels, expected: Sequence[Optional[str]]
    ) -> None:
        """
        Compares labels with a list of "max", "min", "none" or None.
        """
        self.assertEqual(list(labels), [LABELS[label] for label in expected])

    def assert_counts_equal(self, labels: Labels, maxima: int, minima: int) -> None:
        self.assertEqual(
            sum(1 for label in labels if label == Extremality.MAX), maxima
        )
        self.assertEqual(
            sum(1 for label in labels if label == Extremality.MIN), minima
        )

    def assert_vertices_equal(
        self, polygon: Polygon, expected: List[Sequence[str]]
    ) -> None:
        self.assertEqual(polygon.describe(), [list(vertex) for vertex in expected])
