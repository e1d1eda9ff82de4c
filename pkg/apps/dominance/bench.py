# Third-Party
import numpy as np

# Python
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, TextIO
import csv
import logging
import time

# Local
from .generators import GeneratorSpec, generate
from .solver import run_pipeline


logger = logging.getLogger(__name__)

CSV_HEADER = ("family", "n", "m", "k", "stage", "seconds")


@dataclass(frozen=True)
class BenchCell:
    family: str
    n: int
    m: int
    k: int
    stage: str
    seconds: float


@dataclass(frozen=True)
class BenchJob:
    family: str
    n: int
    m: int
    k: int
    seed: int
    repetitions: int
    use_compression: bool
    pred_limit: int
    memory_budget: int


def run_job(job: BenchJob) -> list[BenchCell]:
    """
    Time every pipeline stage of one generated instance.

    The fastest of ``repetitions`` runs is kept per stage; ``total`` is the
    fastest end-to-end wall time.
    """
    inst = generate(GeneratorSpec(
        family=job.family, n=job.n, m=job.m, k=job.k, seed=job.seed,
        coord_range=max(1000, 10 * (job.n + job.m)),
    ))
    best: dict[str, float] = {}
    for _ in range(job.repetitions):
        started = time.perf_counter()
        report = run_pipeline(
            inst, job.use_compression, pred_limit=job.pred_limit,
            memory_budget=job.memory_budget,
        )
        stages = dict(report.timings, total=time.perf_counter() - started)
        for stage, seconds in stages.items():
            best[stage] = min(seconds, best.get(stage, seconds))
    return [
        BenchCell(job.family, job.n, job.m, job.k, stage, seconds)
        for stage, seconds in best.items()
    ]


def run_sweep(jobs: Iterable[BenchJob], workers: int = 1) -> list[BenchCell]:
    """Run jobs in order, or on ``workers`` processes; each solve stays single-threaded."""
    jobs = list(jobs)
    if workers <= 1:
        results = [run_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_job, jobs))
    return [cell for cells in results for cell in cells]


def sweep_jobs(
    families: Iterable[str], ns: Iterable[int], ms: Iterable[int],
    ks: Iterable[int], *, seed: int = 1, repetitions: int = 3,
    use_compression: bool = True, pred_limit: int, memory_budget: int,
) -> list[BenchJob]:
    return [
        BenchJob(
            family=family, n=n, m=m, k=k, seed=seed, repetitions=repetitions,
            use_compression=use_compression, pred_limit=pred_limit,
            memory_budget=memory_budget,
        )
        for family, n, m, k in product(families, ns, ms, ks)
    ]


def fit_slope(xs: Iterable[float], ys: Iterable[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    xs, ys = np.asarray(list(xs), dtype=float), np.asarray(list(ys), dtype=float)
    slope, _ = np.polyfit(np.log(xs), np.log(np.maximum(ys, 1e-9)), 1)
    return float(slope)


def scaling_slopes(
    cells: Iterable[BenchCell], stage: str = "dp"
) -> dict[str, dict[tuple, float]]:
    """
    Slopes of ``stage`` time against m (per family, n, k) and against k (per
    family, n, m), for every group with at least two distinct values.
    """
    cells = [cell for cell in cells if cell.stage == stage]
    slopes: dict[str, dict[tuple, float]] = {"m": {}, "k": {}}
    for axis, key in (
        ("m", lambda c: (c.family, c.n, c.k)),
        ("k", lambda c: (c.family, c.n, c.m)),
    ):
        groups: dict[tuple, list[BenchCell]] = {}
        for cell in cells:
            groups.setdefault(key(cell), []).append(cell)
        for group, members in groups.items():
            values = sorted({getattr(c, axis) for c in members})
            if len(values) < 2:
                continue
            members.sort(key=lambda c: getattr(c, axis))
            slopes[axis][group] = fit_slope(
                [getattr(c, axis) for c in members], [c.seconds for c in members]
            )
    return slopes


def write_csv(cells: Iterable[BenchCell], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for c in cells:
        writer.writerow((c.family, c.n, c.m, c.k, c.stage, f"{c.seconds:.6f}"))


def format_table(cells: Iterable[BenchCell], min_time: float = 0.0) -> str:
    """Aligned text table; cells faster than ``min_time`` are marked with ``*``."""
    rows = [("family", "n", "m", "k", "stage", "seconds")]
    for c in cells:
        mark = "*" if c.seconds < min_time else ""
        rows.append((c.family, str(c.n), str(c.m), str(c.k), c.stage,
                     f"{c.seconds:.6f}{mark}"))
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    return "\n".join(
        "  ".join(value.rjust(width) for value, width in zip(row, widths))
        for row in rows
    )


def under_timed(cells: Iterable[BenchCell], min_time: float) -> list[BenchCell]:
    return [c for c in cells if c.seconds < min_time]
