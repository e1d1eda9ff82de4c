# Third-Party
import numpy as np

# Python
from dataclasses import dataclass
import logging

# Local
from .exceptions import InstanceError
from .geometry import Instance, QueryPoint, WeightedPoint, skyline


logger = logging.getLogger(__name__)

FAMILIES = (
    "uniform", "clustered", "one-cell-adversarial", "skyline-unit-weight",
    "negative-mix",
)
DEFAULT_MAX_POINTS = 5_000_000


@dataclass(frozen=True)
class GeneratorSpec:
    """Everything that determines a generated instance."""

    family: str
    n: int
    m: int
    k: int
    w_min: int = -10
    w_max: int = 10
    seed: int = 1
    coord_range: int = 1000


class RandomStream:
    """
    Integer draws from the raw PCG64 stream.

    Only the bit generator's raw 64-bit output is consumed; the mapping to a
    range is done here by multiply-and-shift, so a seed yields the same draws
    whatever numpy's distribution code does.
    """

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def integers(self, low: int, high: int, size: int) -> list[int]:
        """``size`` integers uniform in [low, high], both inclusive."""
        if size == 0:
            return []
        span = high - low + 1
        raw = self._bits.random_raw(size).tolist()
        return [low + ((r * span) >> 64) for r in raw]


def _weights(stream: RandomStream, spec: GeneratorSpec, size: int) -> list[int]:
    return stream.integers(spec.w_min, spec.w_max, size)


def _uniform_queries(stream: RandomStream, spec: GeneratorSpec) -> list[QueryPoint]:
    xs = stream.integers(0, spec.coord_range - 1, spec.m)
    ys = stream.integers(0, spec.coord_range - 1, spec.m)
    return [QueryPoint(x=x, y=y, id=t) for t, (x, y) in enumerate(zip(xs, ys))]


def _uniform(stream: RandomStream, spec: GeneratorSpec) -> Instance:
    xs = stream.integers(0, spec.coord_range - 1, spec.n)
    ys = stream.integers(0, spec.coord_range - 1, spec.n)
    ws = _weights(stream, spec, spec.n)
    P = [WeightedPoint(x=x, y=y, w=w) for x, y, w in zip(xs, ys, ws)]
    return Instance(P=P, Q=_uniform_queries(stream, spec), k=spec.k)


def _negative_mix(stream: RandomStream, spec: GeneratorSpec) -> Instance:
    # Two of three weights negative.
    xs = stream.integers(0, spec.coord_range - 1, spec.n)
    ys = stream.integers(0, spec.coord_range - 1, spec.n)
    bound = max(abs(spec.w_min), abs(spec.w_max), 1)
    magnitudes = stream.integers(1, bound, spec.n)
    signs = stream.integers(0, 2, spec.n)
    P = [
        WeightedPoint(x=x, y=y, w=-w if sign < 2 else w)
        for x, y, w, sign in zip(xs, ys, magnitudes, signs)
    ]
    return Instance(P=P, Q=_uniform_queries(stream, spec), k=spec.k)


def _clustered(stream: RandomStream, spec: GeneratorSpec) -> Instance:
    clusters = max(1, int(np.sqrt(max(spec.m, 1))))
    spread = max(1, spec.coord_range // 50)
    cx = stream.integers(0, spec.coord_range - 1, clusters)
    cy = stream.integers(0, spec.coord_range - 1, clusters)
    owner = stream.integers(0, clusters - 1, spec.n)
    dx = stream.integers(-spread, spread, spec.n)
    dy = stream.integers(-spread, spread, spec.n)
    ws = _weights(stream, spec, spec.n)
    P = [
        WeightedPoint(x=cx[c] + ox, y=cy[c] + oy, w=w)
        for c, ox, oy, w in zip(owner, dx, dy, ws)
    ]
    return Instance(P=P, Q=_uniform_queries(stream, spec), k=spec.k)


def _one_cell(stream: RandomStream, spec: GeneratorSpec) -> Instance:
    """
    Q is the staircase (10(t+1), 10(m-t)); every P-point lies left of the
    leftmost and between the two highest query points, i.e. in one cell.
    """
    m = spec.m
    Q = [QueryPoint(x=10 * (t + 1), y=10 * (m - t), id=t) for t in range(m)]
    xs = stream.integers(1, 9, spec.n)
    ys = stream.integers(10 * m - 9, 10 * m - 1, spec.n)
    ws = stream.integers(max(1, spec.w_min), max(1, spec.w_max), spec.n)
    P = [WeightedPoint(x=x, y=y, w=w) for x, y, w in zip(xs, ys, ws)]
    return Instance(P=P, Q=Q, k=spec.k)


def _skyline_unit_weight(stream: RandomStream, spec: GeneratorSpec) -> Instance:
    """Unit weights and Q = skyline of P; ``spec.m`` is ignored."""
    xs = stream.integers(0, spec.coord_range - 1, spec.n)
    ys = stream.integers(0, spec.coord_range - 1, spec.n)
    P = [WeightedPoint(x=x, y=y, w=1) for x, y in zip(xs, ys)]
    maximal = sorted(skyline(list(zip(xs, ys))), key=lambda t: (xs[t], -ys[t]))
    Q = [QueryPoint(x=xs[t], y=ys[t], id=index) for index, t in enumerate(maximal)]
    if not Q:
        Q = [QueryPoint(x=0, y=0, id=0)]
    return Instance(P=P, Q=Q, k=spec.k)


_BUILDERS = {
    "uniform": _uniform,
    "clustered": _clustered,
    "one-cell-adversarial": _one_cell,
    "skyline-unit-weight": _skyline_unit_weight,
    "negative-mix": _negative_mix,
}


def generate(spec: GeneratorSpec, max_points: int = DEFAULT_MAX_POINTS) -> Instance:
    """
    Deterministic instance of the requested family.

    :param spec: Family, sizes, weight range and seed.
    :type spec: GeneratorSpec
    :param max_points: Cap on ``n`` and ``m``.
    :type max_points: int
    :raises InstanceError: On an unknown family or sizes beyond the cap.
    :return: The generated instance.
    :rtype: Instance
    """
    builder = _BUILDERS.get(spec.family)
    if builder is None:
        raise InstanceError(message=f"unknown family {spec.family!r}")
    if spec.n > max_points or spec.m > max_points:
        raise InstanceError(
            message=f"n={spec.n}, m={spec.m} exceed the cap of {max_points} points"
        )
    if spec.m < 1 and spec.family != "skyline-unit-weight":
        raise InstanceError(message="m must be at least 1")
    if spec.w_min > spec.w_max:
        raise InstanceError(message="w_min must not exceed w_max")
    inst = builder(RandomStream(spec.seed), spec)
    logger.debug(
        msg=f"generated {spec.family} n={inst.n} m={inst.m} k={inst.k} seed={spec.seed}"
    )
    return inst
