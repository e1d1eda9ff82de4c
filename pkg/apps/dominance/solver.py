# Python
from dataclasses import dataclass, field
from typing import Callable
import logging
import math
import time

# Local
from .cells import build_grid, compress
from .geometry import Instance, Solution
from .ranking import RankedInstance, drop_uncovered, rank_transform
from .rho import DEFAULT_MEMORY_BUDGET, RhoSweep, make_sweep_factory


logger = logging.getLogger(__name__)

DEFAULT_PRED_LIMIT = 4_000_000

SweepFactory = Callable[[], RhoSweep]


def add_sentinel(rinst: RankedInstance) -> RankedInstance:
    """
    Attach q_{m+1}, right of and below every ranked coordinate.

    :param rinst: Ranked instance.
    :type rinst: RankedInstance
    :return: The instance with ``sentinel = (2m+3, -1)``.
    :rtype: RankedInstance
    """
    return RankedInstance(
        px=rinst.px, py=rinst.py, pw=rinst.pw, qx=rinst.qx, qy=rinst.qy,
        q_ids=rinst.q_ids, k=rinst.k, y_order=rinst.y_order,
        back_map=rinst.back_map, sentinel=(2 * rinst.m + 3, -1),
    )


def candidate_set(rinst: RankedInstance, i: int) -> list[int]:
    """
    y-indices j <= i with x(q_j) <= x(q_i): the query points left of and not
    below q_i, among which the layer update at ``i`` chooses.
    """
    xs = rinst.x_by_y_index()
    return [j for j in range(1, i + 1) if xs[j] <= xs[i]]


@dataclass
class DpState:
    """
    Layer values of the dynamic program.

    ``T_cur[i]`` is the best weight of the points strictly above q_i coverable
    by at most ``layer`` query points among q_1..q_{i-1} lying left of q_i.
    ``pred[l][i]`` is the y-index chosen at (l, i); ``pred[l][i] == i`` means
    no point was added in layer ``l``.
    """

    xs: list[int]
    T_prev: list[float]
    T_cur: list[float]
    pred: dict[int, list[int]] = field(default_factory=dict)
    layer: int = 0
    keep_pred: bool = True

    @classmethod
    def initial(
        cls, xs: list[int], keep_pred: bool = True,
        T: list[float] | None = None, layer: int = 0,
    ) -> "DpState":
        size = len(xs)
        T = [0.0] * size if T is None else list(T)
        return cls(
            xs=xs, T_prev=list(T), T_cur=T, layer=layer, keep_pred=keep_pred,
        )

    @property
    def top(self) -> int:
        return len(self.xs) - 1

    def run_layer(self, sweep: RhoSweep) -> None:
        """
        Compute layer ``layer + 1`` from the current one with a fresh sweep.

        The no-op candidate (keep the previous layer's value) is tried first and
        only a strictly larger value replaces it; among the others the smallest
        y-index wins ties.
        """
        previous, xs, top = self.T_cur, self.xs, self.top
        current = [0.0] * (top + 1)
        links = list(range(top + 1))
        current[1] = previous[1]
        for i in range(2, top + 1):
            sweep.advance()
            rho = sweep.values
            x_i = xs[i]
            best, arg = previous[i], i
            for j in range(1, i):
                if xs[j] < x_i:
                    value = previous[j] + rho[j]
                    if value > best:
                        best, arg = value, j
            current[i] = best
            links[i] = arg
        self.T_prev, self.T_cur = previous, current
        self.layer += 1
        if self.keep_pred:
            self.pred[self.layer] = links


def _walk(pred: dict[int, list[int]], top_layer: int, bottom_layer: int, i: int,
          chosen: list[int]) -> int:
    for l in range(top_layer, bottom_layer, -1):
        j = pred[l][i]
        if j != i:
            chosen.append(j)
            i = j
    return i


def _reconstruct_checkpointed(
    xs: list[int], k: int, sweep_factory: SweepFactory
) -> tuple[float, list[int], list[float]]:
    """
    Value and chosen y-indices keeping predecessor links for one block of
    layers at a time; T arrays are stored only at block boundaries.
    """
    block = math.isqrt(k - 1) + 1
    top = len(xs) - 1
    state = DpState.initial(xs, keep_pred=False)
    checkpoints = {0: list(state.T_cur)}
    layer_values = []
    for _ in range(k):
        state.run_layer(sweep_factory())
        layer_values.append(state.T_cur[top])
        if state.layer % block == 0:
            checkpoints[state.layer] = list(state.T_cur)

    chosen: list[int] = []
    i, l = top, k
    while l > 0:
        start = ((l - 1) // block) * block
        partial = DpState.initial(xs, keep_pred=True, T=checkpoints[start], layer=start)
        while partial.layer < l:
            partial.run_layer(sweep_factory())
        i = _walk(partial.pred, l, start, i, chosen)
        l = start
    return state.T_cur[top], chosen, layer_values


def solve(
    rinst: RankedInstance,
    sweep_factory: SweepFactory | None = None,
    *,
    pred_limit: int = DEFAULT_PRED_LIMIT,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
    timings: dict[str, float] | None = None,
    layer_values: list[float] | None = None,
) -> Solution:
    """
    Layered dynamic program over the query points in decreasing y.

    :param rinst: Ranked instance with the sentinel added.
    :type rinst: RankedInstance
    :param sweep_factory: Producer of rho sweeps from row 1; built from
        ``rinst`` when omitted.
    :type sweep_factory: Callable[[], RhoSweep] | None
    :param pred_limit: Largest number of predecessor links kept in memory.
    :type pred_limit: int
    :param memory_budget: Byte budget for the sweep's x-order table.
    :type memory_budget: int
    :param timings: Receives ``dp`` and ``reconstruct`` seconds when given.
    :type timings: dict[str, float] | None
    :param layer_values: Receives T_l(m+1) for l = 1..k when given.
    :type layer_values: list[float] | None
    :return: Optimal value and a subset of at most ``k`` query ids reaching it.
    :rtype: Solution
    """
    if rinst.sentinel is None:
        rinst = add_sentinel(rinst)
    k = rinst.effective_k
    if k == 0:
        return Solution(chosen=frozenset(), value=0.0)
    if sweep_factory is None:
        sweep_factory = make_sweep_factory(rinst, memory_budget=memory_budget)

    xs = rinst.x_by_y_index()
    top = len(xs) - 1
    started = time.perf_counter()
    if k * (top + 1) <= pred_limit:
        state = DpState.initial(xs)
        values = []
        for _ in range(k):
            state.run_layer(sweep_factory())
            values.append(state.T_cur[top])
        dp_done = time.perf_counter()
        chosen: list[int] = []
        _walk(state.pred, k, 0, top, chosen)
        value = state.T_cur[top]
    else:
        logger.warning(
            msg=f"k*(m+2)={k * (top + 1)} exceeds {pred_limit} predecessor links, "
                "reconstructing block by block"
        )
        value, chosen, values = _reconstruct_checkpointed(xs, k, sweep_factory)
        dp_done = time.perf_counter()
    finished = time.perf_counter()

    if timings is not None:
        timings["dp"] = dp_done - started
        timings["reconstruct"] = finished - dp_done
    if layer_values is not None:
        layer_values.extend(values)

    ids = [int(rinst.q_ids[rinst.y_order[j - 1]]) for j in chosen]
    logger.debug(msg=f"dp value {value} with {len(ids)} of at most {k} points")
    return Solution(chosen=frozenset(ids), value=float(value))


@dataclass
class PipelineReport:
    """A solution together with the stage timings and sizes of one pipeline run."""

    solution: Solution
    n: int
    m: int
    k: int
    retained: int
    cells: int
    compressed_size: int | None
    timings: dict[str, float] = field(default_factory=dict)


def run_pipeline(
    inst: Instance,
    use_compression: bool = True,
    *,
    pred_limit: int = DEFAULT_PRED_LIMIT,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> PipelineReport:
    """
    Rank, drop uncovered points, optionally compress to cell representatives,
    then run the dynamic program.

    :param inst: Instance in original coordinates.
    :type inst: Instance
    :param use_compression: Replace P by its cell representatives first.
    :type use_compression: bool
    :return: The solution with stage timings and sizes.
    :rtype: PipelineReport
    """
    timings: dict[str, float] = {}

    started = time.perf_counter()
    rinst = rank_transform(inst)
    timings["transform"] = time.perf_counter() - started

    started = time.perf_counter()
    rinst = drop_uncovered(rinst)
    timings["drop"] = time.perf_counter() - started
    retained = rinst.n

    started = time.perf_counter()
    grid = build_grid(rinst)
    timings["grid"] = time.perf_counter() - started

    compressed_size = None
    if use_compression:
        started = time.perf_counter()
        representatives = compress(grid, rinst)
        rinst = rinst.with_points(
            representatives.px, representatives.py, representatives.pw
        )
        compressed_size = len(representatives)
        grid = build_grid(rinst)
        timings["compress"] = time.perf_counter() - started

    rinst = add_sentinel(rinst)
    started = time.perf_counter()
    factory = make_sweep_factory(rinst, grid=grid, memory_budget=memory_budget)
    timings["prefix"] = time.perf_counter() - started

    solution = solve(
        rinst, factory, pred_limit=pred_limit, memory_budget=memory_budget,
        timings=timings,
    )
    logger.info(
        msg=f"solved n={inst.n} m={inst.m} k={inst.k}: value={solution.value} "
            f"retained={retained} cells={len(grid)} compressed={compressed_size}"
    )
    return PipelineReport(
        solution=solution, n=inst.n, m=inst.m, k=inst.k, retained=retained,
        cells=len(grid), compressed_size=compressed_size, timings=timings,
    )


def solve_pipeline(
    inst: Instance,
    use_compression: bool = True,
    *,
    pred_limit: int = DEFAULT_PRED_LIMIT,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> Solution:
    """Solution of :func:`run_pipeline`."""
    return run_pipeline(
        inst, use_compression, pred_limit=pred_limit, memory_budget=memory_budget,
    ).solution
