# Third-Party
import numpy as np

# Python
from dataclasses import dataclass
from typing import Iterable, Sequence
import math

# Local
from .exceptions import InstanceError


@dataclass(frozen=True)
class WeightedPoint:
    """A point of P carrying a signed weight."""

    x: float
    y: float
    w: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x, self.y, self.w)):
            raise InstanceError(
                message=f"non-finite weighted point ({self.x}, {self.y}, {self.w})"
            )


@dataclass(frozen=True)
class QueryPoint:
    """A point of Q; ``id`` is its index in the input order of Q."""

    x: float
    y: float
    id: int

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InstanceError(
                message=f"non-finite query point {self.id}: ({self.x}, {self.y})"
            )


@dataclass(frozen=True)
class Instance:
    """
    A maxDominance instance.

    A budget larger than ``m`` is accepted and behaves like ``k = m``.
    """

    P: tuple[WeightedPoint, ...]
    Q: tuple[QueryPoint, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "P", tuple(self.P))
        object.__setattr__(self, "Q", tuple(self.Q))
        if not self.Q:
            raise InstanceError(message="Q must contain at least one point")
        if self.k < 0:
            raise InstanceError(message=f"budget must be non-negative, got {self.k}")
        ids = [q.id for q in self.Q]
        if len(set(ids)) != len(ids):
            raise InstanceError(message="query point ids must be unique")

    @property
    def n(self) -> int:
        return len(self.P)

    @property
    def m(self) -> int:
        return len(self.Q)

    def with_budget(self, k: int) -> "Instance":
        return Instance(P=self.P, Q=self.Q, k=k)


@dataclass(frozen=True)
class Solution:
    """Chosen query ids and the weight of the union of their quadrants."""

    chosen: frozenset[int]
    value: float

    def __post_init__(self):
        object.__setattr__(self, "chosen", frozenset(self.chosen))

    @property
    def sorted_ids(self) -> list[int]:
        return sorted(self.chosen)


def dominates_closed(q: QueryPoint, p: WeightedPoint) -> bool:
    """True iff ``p`` lies in dom(q) = (-inf, x(q)] x (-inf, y(q)]."""
    return p.x <= q.x and p.y <= q.y


def point_arrays(P: Sequence[WeightedPoint]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Columns x, y, w of a point sequence as float64 arrays."""
    if not P:
        empty = np.zeros(0, dtype=np.float64)
        return empty, empty.copy(), empty.copy()
    data = np.array([(p.x, p.y, p.w) for p in P], dtype=np.float64)
    return data[:, 0], data[:, 1], data[:, 2]


def query_arrays(Q: Sequence[QueryPoint]) -> tuple[np.ndarray, np.ndarray]:
    if not Q:
        empty = np.zeros(0, dtype=np.float64)
        return empty, empty.copy()
    data = np.array([(q.x, q.y) for q in Q], dtype=np.float64)
    return data[:, 0], data[:, 1]


def coverage_matrix(
    P: Sequence[WeightedPoint], Q: Sequence[QueryPoint]
) -> np.ndarray:
    """
    Closed dominance for every pair.

    :param P: Weighted points (rows).
    :type P: Sequence[WeightedPoint]
    :param Q: Query points (columns).
    :type Q: Sequence[QueryPoint]
    :return: Boolean matrix ``M`` with ``M[a, b]`` true iff ``Q[b]`` covers ``P[a]``.
    :rtype: np.ndarray
    """
    px, py, _ = point_arrays(P)
    qx, qy = query_arrays(Q)
    return (px[:, None] <= qx[None, :]) & (py[:, None] <= qy[None, :])


def weight_of_dom(P: Sequence[WeightedPoint], chosen: Iterable[QueryPoint]) -> float:
    """
    Weight of the points of ``P`` lying in the union of the chosen quadrants.

    Every point is counted once, however many quadrants contain it; an empty
    cover weighs zero.

    :param P: Weighted points.
    :type P: Sequence[WeightedPoint]
    :param chosen: Query points whose quadrants form the region.
    :type chosen: Iterable[QueryPoint]
    :return: Sum of the covered weights.
    :rtype: float
    """
    chosen = tuple(chosen)
    if not P or not chosen:
        return 0.0
    covered = coverage_matrix(P, chosen).any(axis=1)
    _, _, w = point_arrays(P)
    return float(w[covered].sum())


def skyline(points: Sequence[tuple[float, float]]) -> list[int]:
    """
    Indices of the maximal points of ``points``.

    A point is maximal when no other point is >= in both coordinates and >
    in at least one. Of several identical maximal points only the first is
    reported.

    :param points: (x, y) pairs.
    :type points: Sequence[tuple[float, float]]
    :return: Indices of maximal points, in decreasing x.
    :rtype: list[int]
    """
    order = sorted(
        range(len(points)), key=lambda t: (-points[t][0], -points[t][1], t)
    )
    result = []
    best_y = -math.inf
    for t in order:
        if points[t][1] > best_y:
            result.append(t)
            best_y = points[t][1]
    return result
