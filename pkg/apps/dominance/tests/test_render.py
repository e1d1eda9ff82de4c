# Django
from django.test import SimpleTestCase

# Python
from pathlib import Path
import tempfile
import xml.etree.ElementTree as ET

# Local
from dominance.exceptions import RenderLimitExceeded
from dominance.render import render_svg, staircase, write_svg
from .helpers import make_instance


def group(root: ET.Element, name: str) -> ET.Element:
    return next(g for g in root.findall("g") if g.get("id") == name)


class TestStaircase(SimpleTestCase):
    def test_outline(self):
        self.assertEqual(
            first=staircase([(2, 4), (4, 2)]),
            second=[(0, 4), (2, 4), (2, 2), (4, 2), (4, 0)],
        )

    def test_dominated_corner_ignored(self):
        self.assertEqual(
            first=staircase([(2, 4), (1, 1)]), second=[(0, 4), (2, 4), (2, 0)]
        )

    def test_empty(self):
        self.assertEqual(first=staircase([]), second=[])


class TestRenderSvg(SimpleTestCase):
    def setUp(self) -> None:
        self.inst = make_instance(
            P=[(2, 5, 7), (0, 9, 1), (4, 3, -2)],
            Q=[(3, 10), (1, 8), (5, 6), (2, 4), (4, 2)],
            k=2,
        )

    def test_groups(self):
        root = render_svg(self.inst)
        self.assertEqual(first=root.tag, second="svg")
        self.assertEqual(
            first=[g.get("id") for g in root.findall("g")],
            second=["strip", "cells", "lines", "dominance", "queries", "representatives"],
        )
        self.assertEqual(first=len(group(root, "cells")), second=3)
        self.assertEqual(first=len(group(root, "representatives")), second=3)
        self.assertEqual(first=len(group(root, "queries")), second=5)
        self.assertEqual(first=len(group(root, "strip")), second=0)

    def test_highlighted_row(self):
        root = render_svg(self.inst, highlight_row=3)
        self.assertEqual(first=len(group(root, "strip")), second=3)

    def test_chosen_quadrants(self):
        root = render_svg(self.inst, chosen=[0, 2])
        region = group(root, "dominance")
        self.assertEqual(first=len(region.findall("rect")), second=2)
        self.assertEqual(first=len(region.findall("polyline")), second=1)
        fills = [dot.get("fill") for dot in group(root, "queries")]
        self.assertEqual(first=fills.count("#1f3f8f"), second=2)

    def test_empty_point_set(self):
        root = render_svg(make_instance(P=[], Q=[(1, 3), (2, 2)], k=1))
        self.assertEqual(first=len(group(root, "cells")), second=0)
        self.assertEqual(first=len(group(root, "representatives")), second=0)
        self.assertEqual(first=len(group(root, "lines")), second=4)

    def test_limit(self):
        with self.assertRaises(RenderLimitExceeded):
            render_svg(self.inst, max_m=4)

    def test_write(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "figure.svg"
            write_svg(render_svg(self.inst), path)
            self.assertTrue(path.read_text(encoding="utf-8").startswith("<?xml"))
