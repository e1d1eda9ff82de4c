# Python
from itertools import combinations
from math import comb
import logging

# Local
from .exceptions import OracleLimitExceeded
from .geometry import Instance, Solution, coverage_matrix, point_arrays


logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 10**6


def subset_count(m: int, k: int) -> int:
    return sum(comb(m, t) for t in range(min(k, m) + 1))


def oracle_solve(inst: Instance, limit: int = DEFAULT_LIMIT) -> Solution:
    """
    Exhaustive maxDominance: try every subset of at most ``k`` query points.

    Subsets are visited by size, then lexicographically by id; the first one
    reaching the maximum is returned, so the empty set wins when nothing is
    worth covering.

    :param inst: Instance in original coordinates.
    :type inst: Instance
    :param limit: Largest number of subsets to enumerate.
    :type limit: int
    :raises OracleLimitExceeded: If the instance needs more than ``limit`` subsets.
    :return: An optimal solution.
    :rtype: Solution
    """
    total = subset_count(inst.m, inst.k)
    if total > limit:
        raise OracleLimitExceeded(
            f"{total} subsets for m={inst.m}, k={inst.k} exceed the limit {limit}"
        )

    queries = sorted(inst.Q, key=lambda q: q.id)
    covers = coverage_matrix(inst.P, queries)
    _, _, weights = point_arrays(inst.P)

    best_value, best_subset = 0.0, ()
    for size in range(1, min(inst.k, inst.m) + 1):
        for subset in combinations(range(len(queries)), size):
            covered = covers[:, list(subset)].any(axis=1)
            value = float(weights[covered].sum())
            if value > best_value:
                best_value, best_subset = value, subset
    logger.debug(msg=f"oracle enumerated {total} subsets, best {best_value}")
    return Solution(
        chosen=frozenset(queries[t].id for t in best_subset), value=best_value,
    )
