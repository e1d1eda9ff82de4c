# Third-Party
import numpy as np

# Python
from dataclasses import dataclass
import logging

# Local
from .exceptions import InstanceError, NotRankedError
from .geometry import (
    Instance, QueryPoint, WeightedPoint, point_arrays, query_arrays,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RankedInstance:
    """
    An instance in rank space.

    Q coordinates are the even numbers 2..2m on each axis (pairwise distinct),
    P coordinates are odd, so a P-point never sits on a line through a Q-point.
    Index ``t`` of the Q arrays is the ``t``-th point of the source instance.
    """

    px: np.ndarray
    py: np.ndarray
    pw: np.ndarray
    qx: np.ndarray
    qy: np.ndarray
    q_ids: np.ndarray
    k: int
    y_order: np.ndarray
    back_map: dict[int, QueryPoint]
    sentinel: tuple[int, int] | None = None

    @property
    def n(self) -> int:
        return int(self.px.shape[0])

    @property
    def m(self) -> int:
        return int(self.qx.shape[0])

    @property
    def effective_k(self) -> int:
        return min(self.k, self.m)

    def with_points(self, px, py, pw) -> "RankedInstance":
        """Same Q and budget, different P (already in ranked coordinates)."""
        return RankedInstance(
            px=np.asarray(px, dtype=np.int64), py=np.asarray(py, dtype=np.int64),
            pw=np.asarray(pw, dtype=np.float64), qx=self.qx, qy=self.qy,
            q_ids=self.q_ids, k=self.k, y_order=self.y_order,
            back_map=self.back_map, sentinel=self.sentinel,
        )

    def x_by_y_index(self) -> list[int]:
        """
        x of q_1..q_m (decreasing y), 1-based; the sentinel, if added, is q_{m+1}.
        """
        xs = [0] + self.qx[self.y_order].tolist()
        if self.sentinel is not None:
            xs.append(self.sentinel[0])
        return xs

    def weighted_points(self) -> list[WeightedPoint]:
        return [
            WeightedPoint(x=float(x), y=float(y), w=float(w))
            for x, y, w in zip(self.px.tolist(), self.py.tolist(), self.pw.tolist())
        ]

    def query_points(self) -> list[QueryPoint]:
        return [
            QueryPoint(x=float(x), y=float(y), id=int(i))
            for x, y, i in zip(self.qx.tolist(), self.qy.tolist(), self.q_ids.tolist())
        ]

    def to_instance(self) -> Instance:
        """
        The ranked instance as a plain :class:`Instance`.

        Coordinates stay ranked, query ids stay the original ones.
        """
        return Instance(P=self.weighted_points(), Q=self.query_points(), k=self.k)

    def check_ranked(self):
        """
        Raise :class:`NotRankedError` unless coordinate parity and Q ranks hold.
        """
        m = self.m
        expected = np.arange(2, 2 * m + 1, 2)
        if not (
            np.array_equal(np.sort(self.qx), expected)
            and np.array_equal(np.sort(self.qy), expected)
        ):
            raise NotRankedError(
                message="Q coordinates are not the even ranks 2..2m"
            )
        if self.n and (
            np.any(self.px % 2 == 0) or np.any(self.py % 2 == 0)
            or self.px.min() < 1 or self.py.min() < 1
            or self.px.max() > 2 * m + 1 or self.py.max() > 2 * m + 1
        ):
            raise NotRankedError(
                message="P coordinates are not odd ranks in [1, 2m+1]"
            )


def _axis_ranks(
    q_values: np.ndarray, q_ids: np.ndarray, p_values: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    Rank one axis.

    Q gets 2r where r is its position under (value, id) order. P gets 2r-1 for
    the smallest Q-rank r whose value is >= the P value (m+1 if none), so a
    P value equal to a Q value stays below every tied Q.
    """
    m = q_values.shape[0]
    order = np.lexsort((q_ids, q_values))
    q_rank = np.empty(m, dtype=np.int64)
    q_rank[order] = np.arange(1, m + 1, dtype=np.int64)
    p_rank = np.searchsorted(q_values[order], p_values, side="left") + 1
    return 2 * q_rank, 2 * p_rank.astype(np.int64) - 1


def rank_transform(inst: Instance) -> RankedInstance:
    """
    Map an instance to rank space, preserving closed dominance of every pair.

    :param inst: Source instance.
    :type inst: Instance
    :raises InstanceError: If a coordinate is not finite.
    :return: The equivalent ranked instance.
    :rtype: RankedInstance
    """
    px, py, pw = point_arrays(inst.P)
    qx, qy = query_arrays(inst.Q)
    if not (np.isfinite(px).all() and np.isfinite(py).all() and np.isfinite(pw).all()
            and np.isfinite(qx).all() and np.isfinite(qy).all()):
        raise InstanceError(message="instance contains non-finite values")
    q_ids = np.array([q.id for q in inst.Q], dtype=np.int64)

    rqx, rpx = _axis_ranks(qx, q_ids, px)
    rqy, rpy = _axis_ranks(qy, q_ids, py)
    y_order = np.argsort(-rqy, kind="stable")

    logger.debug(msg=f"ranked n={inst.n} m={inst.m}")
    return RankedInstance(
        px=rpx, py=rpy, pw=pw, qx=rqx, qy=rqy, q_ids=q_ids, k=inst.k,
        y_order=y_order, back_map={q.id: q for q in inst.Q},
    )


def covered_mask(rinst: RankedInstance) -> np.ndarray:
    """
    Boolean mask of the P-points lying in dom(Q).

    Staircase sweep: the highest Q among those with x-rank >= r decides
    coverage of every P-point whose x is 2r-1.
    """
    m = rinst.m
    ys_by_x = np.empty(m + 1, dtype=np.int64)
    ys_by_x[rinst.qx // 2 - 1] = rinst.qy
    ys_by_x[m] = -1
    suffix_max = np.maximum.accumulate(ys_by_x[::-1])[::-1]
    return suffix_max[(rinst.px + 1) // 2 - 1] >= rinst.py


def drop_uncovered(rinst: RankedInstance) -> RankedInstance:
    """
    Remove the P-points that no query point covers.

    :param rinst: Ranked instance.
    :type rinst: RankedInstance
    :return: The same instance restricted to P-points inside dom(Q).
    :rtype: RankedInstance
    """
    keep = covered_mask(rinst)
    dropped = rinst.n - int(keep.sum())
    if dropped:
        logger.debug(msg=f"dropped {dropped} of {rinst.n} uncovered points")
    return rinst.with_points(rinst.px[keep], rinst.py[keep], rinst.pw[keep])
