# Third-Party
import numpy as np

# Python
from dataclasses import dataclass
from typing import Iterator
import logging

# Local
from .exceptions import NotRankedError
from .geometry import WeightedPoint
from .ranking import RankedInstance


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CellGrid:
    """
    Non-empty cells of the partition of dom(Q).

    Row ``i`` is the strip between the horizontal lines through q_i and
    q_{i+1} (Q indexed by decreasing y, q_{m+1} the sentinel). Column ``j`` of
    row ``i`` spans the x-range between the (j-1)-th and j-th smallest x among
    q_1..q_i. Cells are stored sorted by (row, col); the cells of row ``i``
    occupy ``row_offsets[i-1]:row_offsets[i]``.
    """

    m: int
    rows: np.ndarray
    cols: np.ndarray
    weights: np.ndarray
    counts: np.ndarray
    row_offsets: np.ndarray
    point_cells: np.ndarray

    def __len__(self) -> int:
        return int(self.rows.shape[0])

    @property
    def cells(self) -> dict[tuple[int, int], float]:
        return {
            (i, j): w for i, j, w in zip(
                self.rows.tolist(), self.cols.tolist(), self.weights.tolist()
            )
        }

    def row_slice(self, i: int) -> slice:
        return slice(int(self.row_offsets[i - 1]), int(self.row_offsets[i]))

    def per_row(self, i: int) -> list[tuple[int, float]]:
        """(col, weight) pairs of row ``i`` in column order."""
        s = self.row_slice(i)
        return list(zip(self.cols[s].tolist(), self.weights[s].tolist()))


@dataclass(frozen=True, eq=False)
class CompressedP:
    """Cell representatives in ranked coordinates, one per nonzero cell."""

    px: np.ndarray
    py: np.ndarray
    pw: np.ndarray
    rows: np.ndarray
    cols: np.ndarray

    def __len__(self) -> int:
        return int(self.px.shape[0])

    @property
    def points(self) -> list[WeightedPoint]:
        return [
            WeightedPoint(x=float(x), y=float(y), w=float(w))
            for x, y, w in zip(self.px.tolist(), self.py.tolist(), self.pw.tolist())
        ]

    @property
    def provenance(self) -> list[tuple[int, int]]:
        return list(zip(self.rows.tolist(), self.cols.tolist()))


def row_x_orders(rinst: RankedInstance) -> Iterator[tuple[int, np.ndarray]]:
    """
    Yield ``(i, xs)`` for i = 1..m, ``xs`` the sorted x of q_1..q_i.

    Each step inserts one value, so the whole walk costs O(m^2).
    """
    xs = np.zeros(0, dtype=np.int64)
    for i, t in enumerate(rinst.y_order.tolist(), start=1):
        x = rinst.qx[t]
        xs = np.insert(xs, np.searchsorted(xs, x), x)
        yield i, xs


def point_rows(rinst: RankedInstance) -> np.ndarray:
    """Strip index of every P-point; odd y = 2t-1 lies between q-ranks t-1 and t."""
    return rinst.m - (rinst.py + 1) // 2 + 1


def _empty_grid(m: int) -> CellGrid:
    empty = np.zeros(0, dtype=np.int64)
    return CellGrid(
        m=m, rows=empty, cols=empty.copy(),
        weights=np.zeros(0, dtype=np.float64), counts=empty.copy(),
        row_offsets=np.zeros(m + 1, dtype=np.int64), point_cells=empty.copy(),
    )


def build_grid(rinst: RankedInstance) -> CellGrid:
    """
    Assign every P-point to its cell and aggregate weights per cell.

    :param rinst: Ranked instance with uncovered points dropped.
    :type rinst: RankedInstance
    :raises NotRankedError: If parity shows the instance was not ranked, or a
        point lies outside dom(Q).
    :return: The sparse cell grid.
    :rtype: CellGrid
    """
    rinst.check_ranked()
    m, n = rinst.m, rinst.n
    if n == 0:
        return _empty_grid(m)

    rows = point_rows(rinst)
    if rows.min() < 1:
        raise NotRankedError(
            message="points above every query point; run drop_uncovered first"
        )
    cols = np.zeros(n, dtype=np.int64)
    order = np.argsort(rows, kind="stable")
    starts = np.searchsorted(rows[order], np.arange(1, m + 2))
    for i, xs in row_x_orders(rinst):
        lo, hi = starts[i - 1], starts[i]
        if lo == hi:
            continue
        members = order[lo:hi]
        cols[members] = np.searchsorted(xs, rinst.px[members]) + 1
    if np.any(cols > rows):
        raise NotRankedError(
            message="points right of every higher query point; run drop_uncovered first"
        )

    # (row, col) packed into one key; sorting the keys groups each cell.
    keys = rows * (m + 1) + cols
    unique_keys, point_cells = np.unique(keys, return_inverse=True)
    weights = np.bincount(point_cells, weights=rinst.pw, minlength=unique_keys.size)
    counts = np.bincount(point_cells, minlength=unique_keys.size)
    cell_rows = unique_keys // (m + 1)
    grid = CellGrid(
        m=m, rows=cell_rows, cols=unique_keys % (m + 1),
        weights=weights.astype(np.float64), counts=counts.astype(np.int64),
        row_offsets=np.searchsorted(cell_rows, np.arange(1, m + 2)),
        point_cells=point_cells.astype(np.int64),
    )
    logger.debug(msg=f"grid: {len(grid)} non-empty cells from {n} points")
    return grid


def compress(grid: CellGrid, rinst: RankedInstance) -> CompressedP:
    """
    One representative per non-empty cell of nonzero weight.

    The representative sits one unit right of and above the lower-left corner
    of its cell, which in rank space is strictly inside the cell.

    :param grid: Grid built from ``rinst``.
    :type grid: CellGrid
    :param rinst: The ranked instance.
    :type rinst: RankedInstance
    :return: The compressed point set P'.
    :rtype: CompressedP
    """
    m = rinst.m
    left = np.zeros(len(grid), dtype=np.int64)
    for i, xs in row_x_orders(rinst):
        s = grid.row_slice(i)
        if s.start == s.stop:
            continue
        edges = np.concatenate((np.zeros(1, dtype=np.int64), xs))
        left[s] = edges[grid.cols[s] - 1]

    keep = grid.weights != 0
    rows = grid.rows[keep]
    compressed = CompressedP(
        px=left[keep] + 1,
        py=2 * (m - rows) + 1,
        pw=grid.weights[keep],
        rows=rows,
        cols=grid.cols[keep],
    )
    logger.debug(
        msg=f"compressed {rinst.n} points to {len(compressed)} representatives"
    )
    return compressed


def same_dominators_check(grid: CellGrid, rinst: RankedInstance) -> bool:
    """
    True iff all points of each cell are covered by the same query points.

    Materializes the n x m coverage matrix; meant for small instances.
    """
    if rinst.n == 0:
        return True
    dominated = (
        (rinst.px[:, None] <= rinst.qx[None, :])
        & (rinst.py[:, None] <= rinst.qy[None, :])
    )
    _, first = np.unique(grid.point_cells, return_index=True)
    reference = dominated[first[grid.point_cells]]
    return bool(np.array_equal(dominated, reference))
