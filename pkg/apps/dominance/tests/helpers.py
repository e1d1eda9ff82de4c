# Third-Party
from hypothesis import strategies as st
import numpy as np

# Python
from itertools import product

# Local
from dominance.generators import GeneratorSpec, generate
from dominance.geometry import (
    Instance, QueryPoint, WeightedPoint, coverage_matrix, point_arrays,
)


def make_instance(P, Q, k) -> Instance:
    """Instance from (x, y, w) and (x, y) tuples; query ids follow list order."""
    return Instance(
        P=[WeightedPoint(x=x, y=y, w=w) for x, y, w in P],
        Q=[QueryPoint(x=x, y=y, id=t) for t, (x, y) in enumerate(Q)],
        k=k,
    )


def seeded_instance(seed: int, n: int = 20, max_m: int = 6, coord_range: int = 8,
                    family: str = "uniform", w_min: int = -10, w_max: int = 10):
    """Small deterministic instance; m and k vary with the seed."""
    m = 1 + seed % max_m
    return generate(GeneratorSpec(
        family=family, n=n, m=m, k=(seed // max_m) % (m + 1), seed=seed,
        coord_range=coord_range, w_min=w_min, w_max=w_max,
    ))


def all_subset_weights(P, Q) -> np.ndarray:
    """
    w(dom(Q')) for every subset Q' of Q, indexed by bitmask over Q's order.
    """
    m = len(Q)
    _, _, weights = point_arrays(P)
    masks = np.array(list(product((False, True), repeat=m)), dtype=np.int64)[:, ::-1]
    covers = coverage_matrix(P, Q).astype(np.int64)
    covered = (covers @ masks.T) > 0
    return weights @ covered if len(P) else np.zeros(2**m)


@st.composite
def instances(draw, max_n=20, max_m=6, coord=5, weights=(-10, 10)):
    """Tie-heavy instances: coordinates from a handful of integers."""
    m = draw(st.integers(min_value=1, max_value=max_m))
    n = draw(st.integers(min_value=0, max_value=max_n))
    c = st.integers(min_value=0, max_value=coord)
    P = draw(st.lists(
        st.tuples(c, c, st.integers(min_value=weights[0], max_value=weights[1])),
        min_size=n, max_size=n,
    ))
    Q = draw(st.lists(st.tuples(c, c), min_size=m, max_size=m))
    k = draw(st.integers(min_value=0, max_value=m + 1))
    return make_instance(P, Q, k)
