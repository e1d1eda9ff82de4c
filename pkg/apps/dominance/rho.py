# Third-Party
import numpy as np

# Python
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable
import logging

# Local
from .cells import CellGrid, build_grid, row_x_orders
from .exceptions import DominanceError, SweepExhausted
from .ranking import RankedInstance, drop_uncovered


logger = logging.getLogger(__name__)

DEFAULT_MEMORY_BUDGET = 64 * 1024 * 1024


@dataclass(frozen=True)
class RowPrefix:
    """
    Sparse prefix sums of cell weights, row by row.

    ``rows[i]`` is ``(cols, cumulative)`` for row ``i``: the columns of its
    nonzero cells in increasing order and psum(i, col) at each of them.
    Index 0 is unused.
    """

    m: int
    rows: tuple[tuple[list[int], list[float]], ...]

    def __len__(self) -> int:
        return sum(len(cols) for cols, _ in self.rows)


def build_row_prefix(grid: CellGrid) -> RowPrefix:
    """
    Running sums of the nonzero cells of every row, in column order.

    :param grid: Cell grid.
    :type grid: CellGrid
    :return: Per-row (col, psum) lists.
    :rtype: RowPrefix
    """
    rows = [([], [])]
    for i in range(1, grid.m + 1):
        s = grid.row_slice(i)
        weights = grid.weights[s]
        nonzero = weights != 0
        rows.append((
            grid.cols[s][nonzero].tolist(),
            np.cumsum(weights[nonzero]).tolist(),
        ))
    return RowPrefix(m=grid.m, rows=tuple(rows))


def psum_query(rp: RowPrefix, i: int, l: int) -> float:
    """
    Weight of the cells of row ``i`` with column <= ``l``.

    :param rp: Row prefix sums.
    :type rp: RowPrefix
    :param i: Row, 1 <= i <= m.
    :type i: int
    :param l: Column bound.
    :type l: int
    :return: psum(i, l).
    :rtype: float
    """
    cols, cumulative = rp.rows[i]
    t = bisect_right(cols, l)
    return cumulative[t - 1] if t else 0.0


def x_order_table(rinst: RankedInstance) -> np.ndarray:
    """
    Row ``r`` holds the y-indices of q_1..q_r sorted by x (first ``r`` entries).
    """
    m = rinst.m
    table = np.zeros((m + 1, max(m, 1)), dtype=np.int32)
    by_x = np.zeros(0, dtype=np.int64)
    xs = rinst.x_by_y_index()
    for r, sorted_xs in row_x_orders(rinst):
        by_x = np.insert(by_x, np.searchsorted(sorted_xs, xs[r]), r)
        table[r, :r] = by_x
    return table


def table_bytes(m: int) -> int:
    return 4 * (m + 1) * max(m, 1)


class RhoSweep:
    """
    Cursor over rows i = 1..m+1 holding R[j] = rho(i, j) for j <= i.

    rho(i, j) is the weight of the points strictly above q_i and inside
    dom(q_j). Moving from row i-1 to i adds, for every j < i, the part of strip
    i-1 left of x(q_j); that part is psum(i-1, position of q_j in the x-order of
    q_1..q_{i-1}).

    One owner only: the cursor mutates ``values`` in place.
    """

    def __init__(
        self, prefix: RowPrefix, rinst: RankedInstance,
        table: np.ndarray | None = None,
    ):
        self.prefix = prefix
        self.m = rinst.m
        self.current = 1
        self.values = [0.0] * (self.m + 2)
        self._xs = rinst.x_by_y_index()
        self._table = table
        self._sorted_xs = [self._xs[1]] if self.m else []
        self._by_x = [1] if self.m else []

    def _x_order(self, row: int) -> list[int]:
        if self._table is not None:
            return self._table[row, :row].tolist()
        return self._by_x

    def advance(self) -> "RhoSweep":
        """
        Move to the next row.

        :raises SweepExhausted: If the cursor is already at row m+1.
        :return: The cursor itself.
        :rtype: RhoSweep
        """
        if self.current > self.m:
            raise SweepExhausted(f"sweep is already at row {self.current}")
        row = self.current
        cols, cumulative = self.prefix.rows[row]
        if cols:
            values = self.values
            t, ncols, acc = 0, len(cols), 0.0
            for position, j in enumerate(self._x_order(row), start=1):
                while t < ncols and cols[t] <= position:
                    acc = cumulative[t]
                    t += 1
                values[j] += acc

        self.current = i = row + 1
        self.values[i] = 0.0
        if self._table is None and i <= self.m:
            x = self._xs[i]
            at = bisect_left(self._sorted_xs, x)
            self._sorted_xs.insert(at, x)
            self._by_x.insert(at, i)
        return self

    def rho(self, j: int) -> float:
        if j > self.current:
            raise DominanceError(f"rho({self.current}, {j}) is undefined for j > i")
        return self.values[j]


def sweep_advance(s: RhoSweep, rinst: RankedInstance) -> RhoSweep:
    """Advance ``s`` by one row; ``rinst`` must be the instance it sweeps."""
    if rinst.m != s.m:
        raise DominanceError("sweep does not belong to this instance")
    return s.advance()


def make_sweep_factory(
    rinst: RankedInstance,
    grid: CellGrid | None = None,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> Callable[[], RhoSweep]:
    """
    Factory producing fresh sweeps from row 1 over the same prefix sums.

    The x-order table is precomputed once when it fits into ``memory_budget``,
    otherwise every sweep keeps its own incrementally sorted list.
    """
    if grid is None:
        grid = build_grid(drop_uncovered(rinst))
    prefix = build_row_prefix(grid)
    table = None
    if table_bytes(rinst.m) <= memory_budget:
        table = x_order_table(rinst)
    else:
        logger.debug(
            msg=f"x-order table for m={rinst.m} exceeds the memory budget, "
                "sweeping incrementally"
        )

    def factory() -> RhoSweep:
        return RhoSweep(prefix=prefix, rinst=rinst, table=table)

    return factory


def dense_rho_table(
    rinst: RankedInstance, grid: CellGrid | None = None
) -> np.ndarray:
    """
    Every rho(i, j) at once, shape (m+2, m+2); quadratic space, for cross-checks.
    """
    m = rinst.m
    table = np.zeros((m + 2, m + 2), dtype=np.float64)
    sweep = make_sweep_factory(rinst, grid=grid, memory_budget=0)()
    while sweep.current <= m:
        sweep.advance()
        i = sweep.current
        table[i, 1:i + 1] = sweep.values[1:i + 1]
    return table


def brute_force_rho(rinst: RankedInstance, i: int, j: int) -> float:
    """
    rho(i, j) straight from its definition.

    Weight of the points with y(q_i) < y(p) <= y(q_j) and x(p) <= x(q_j); row
    m+1 is the sentinel below every point.
    """
    if j >= i:
        return 0.0
    ys = [0] + rinst.qy[rinst.y_order].tolist() + [-1]
    xs = [0] + rinst.qx[rinst.y_order].tolist()
    inside = (
        (rinst.py > ys[i]) & (rinst.py <= ys[j]) & (rinst.px <= xs[j])
    )
    return float(rinst.pw[inside].sum())
