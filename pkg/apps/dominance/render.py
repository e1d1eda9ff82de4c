# Python
from pathlib import Path
from typing import Iterable
import xml.etree.ElementTree as ET
import logging

# Local
from .cells import build_grid, compress, row_x_orders
from .exceptions import RenderLimitExceeded
from .geometry import Instance
from .ranking import RankedInstance, drop_uncovered, rank_transform


logger = logging.getLogger(__name__)

DEFAULT_MAX_M = 200
CANVAS = 640
MARGIN = 20

STYLE = {
    "strip": {"fill": "#d9d9d9", "stroke": "none"},
    "cell": {"fill": "#9fd39f", "stroke": "#4c8c4c", "stroke-width": "0.5"},
    "line": {"stroke": "#555555", "stroke-width": "0.75"},
    "ray": {"stroke": "#555555", "stroke-width": "0.75", "stroke-dasharray": "3,2"},
    "quadrant": {"fill": "#3b6fd8", "fill-opacity": "0.15", "stroke": "none"},
    "staircase": {"fill": "none", "stroke": "#1f3f8f", "stroke-width": "2"},
    "query": {"fill": "#c0392b"},
    "chosen": {"fill": "#1f3f8f"},
    "representative": {"fill": "#222222"},
}


class Canvas:
    """Maps ranked coordinates (0..2m+2 on both axes) to SVG pixels, y up."""

    def __init__(self, m: int):
        self.extent = 2 * m + 2
        self.unit = (CANVAS - 2 * MARGIN) / self.extent
        self.root = ET.Element(
            "svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
            width=f"{CANVAS}px", height=f"{CANVAS}px",
            viewBox=f"0 0 {CANVAS} {CANVAS}",
        )

    def px(self, x: float) -> str:
        return f"{MARGIN + x * self.unit:.2f}"

    def py(self, y: float) -> str:
        return f"{CANVAS - MARGIN - y * self.unit:.2f}"

    def group(self, name: str) -> ET.Element:
        return ET.SubElement(self.root, "g", id=name)

    def rect(self, parent, x0, y0, x1, y1, style: str) -> ET.Element:
        return ET.SubElement(
            parent, "rect", x=self.px(x0), y=self.py(y1),
            width=f"{(x1 - x0) * self.unit:.2f}", height=f"{(y1 - y0) * self.unit:.2f}",
            **STYLE[style],
        )

    def line(self, parent, x0, y0, x1, y1, style: str) -> ET.Element:
        return ET.SubElement(
            parent, "line", x1=self.px(x0), y1=self.py(y0), x2=self.px(x1),
            y2=self.py(y1), **STYLE[style],
        )

    def dot(self, parent, x, y, style: str, radius: float = 3.0) -> ET.Element:
        return ET.SubElement(
            parent, "circle", cx=self.px(x), cy=self.py(y), r=f"{radius}",
            **STYLE[style],
        )

    def polyline(self, parent, points: list[tuple[float, float]], style: str):
        path = " ".join(f"{self.px(x)},{self.py(y)}" for x, y in points)
        return ET.SubElement(parent, "polyline", points=path, **STYLE[style])


def staircase(points: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Outline of the union of the lower-left quadrants of ``points``."""
    maximal = []
    best_y = -1
    for x, y in sorted(points, key=lambda p: (-p[0], -p[1])):
        if y > best_y:
            maximal.append((x, y))
            best_y = y
    maximal.reverse()
    if not maximal:
        return []
    outline = [(0, maximal[0][1])]
    for (x, y), following in zip(maximal, maximal[1:] + [None]):
        outline.append((x, y))
        outline.append((x, following[1] if following else 0))
    return outline


def render_svg(
    inst: Instance,
    chosen: Iterable[int] = (),
    highlight_row: int | None = None,
    max_m: int = DEFAULT_MAX_M,
) -> ET.Element:
    """
    Draw the ranked instance: cell partition, representatives and chosen quadrants.

    :param inst: Instance in original coordinates.
    :type inst: Instance
    :param chosen: Query ids whose quadrants are overlaid.
    :type chosen: Iterable[int]
    :param highlight_row: Strip index (1..m) shaded as a whole.
    :type highlight_row: int | None
    :param max_m: Largest m drawn.
    :type max_m: int
    :raises RenderLimitExceeded: If ``inst.m > max_m``.
    :return: The SVG root element.
    :rtype: xml.etree.ElementTree.Element
    """
    if inst.m > max_m:
        raise RenderLimitExceeded(f"m={inst.m} exceeds the render cap of {max_m}")
    rinst = drop_uncovered(rank_transform(inst))
    grid = build_grid(rinst)
    representatives = compress(grid, rinst)
    m = rinst.m
    canvas = Canvas(m)

    strips, cells, lines = (
        canvas.group("strip"), canvas.group("cells"), canvas.group("lines"),
    )
    by_y = rinst.y_order.tolist()
    for i, xs in row_x_orders(rinst):
        bottom, top = 2 * (m - i), 2 * (m - i + 1)
        edges = [0] + xs.tolist()
        if i == highlight_row:
            for j in range(1, i + 1):
                canvas.rect(strips, edges[j - 1], bottom, edges[j], top, "strip")
        s = grid.row_slice(i)
        for j in grid.cols[s].tolist():
            canvas.rect(cells, edges[j - 1], bottom, edges[j], top, "cell")
        q = by_y[i - 1]
        canvas.line(lines, 0, top, edges[-1], top, "line")
        canvas.line(lines, int(rinst.qx[q]), int(rinst.qy[q]), int(rinst.qx[q]), 0, "ray")

    _draw_solution(canvas, rinst, set(chosen))

    points = canvas.group("representatives")
    for x, y in zip(representatives.px.tolist(), representatives.py.tolist()):
        canvas.dot(points, x, y, "representative", radius=2.0)
    logger.debug(
        msg=f"rendered m={m} with {len(grid)} cells, {len(representatives)} representatives"
    )
    return canvas.root


def _draw_solution(canvas: Canvas, rinst: RankedInstance, chosen: set[int]):
    region = canvas.group("dominance")
    corners = []
    for t, ident in enumerate(rinst.q_ids.tolist()):
        if ident in chosen:
            x, y = int(rinst.qx[t]), int(rinst.qy[t])
            corners.append((x, y))
            canvas.rect(region, 0, 0, x, y, "quadrant")
    outline = staircase(corners)
    if outline:
        canvas.polyline(region, outline, "staircase")

    queries = canvas.group("queries")
    for t, ident in enumerate(rinst.q_ids.tolist()):
        style = "chosen" if ident in chosen else "query"
        canvas.dot(queries, int(rinst.qx[t]), int(rinst.qy[t]), style)


def write_svg(root: ET.Element, path: str | Path) -> None:
    ET.ElementTree(root).write(path, encoding="utf-8", xml_declaration=True)
