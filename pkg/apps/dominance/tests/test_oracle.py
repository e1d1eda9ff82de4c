# Third-Party
from hypothesis import given, settings

# Django
from django.test import SimpleTestCase

# Local
from dominance.cells import build_grid, compress
from dominance.exceptions import OracleLimitExceeded
from dominance.geometry import Instance
from dominance.oracle import oracle_solve, subset_count
from dominance.ranking import drop_uncovered, rank_transform
from .helpers import all_subset_weights, instances, make_instance, seeded_instance


class TestOracle(SimpleTestCase):
    def test_subset_count(self):
        self.assertEqual(first=subset_count(4, 2), second=11)
        self.assertEqual(first=subset_count(3, 7), second=8)
        self.assertEqual(first=subset_count(5, 0), second=1)

    def test_limit(self):
        inst = seeded_instance(seed=5, max_m=6)
        with self.assertRaises(OracleLimitExceeded):
            oracle_solve(inst.with_budget(inst.m), limit=2)

    def test_prefers_smallest_subset(self):
        inst = make_instance(P=[(1, 1, 5), (3, 3, 5)], Q=[(2, 2), (4, 1)], k=2)
        solution = oracle_solve(inst)
        self.assertEqual(first=solution.value, second=5.0)
        self.assertEqual(first=solution.chosen, second=frozenset({0}))

    def test_empty_set_when_nothing_pays(self):
        inst = make_instance(P=[(1, 1, -5)], Q=[(2, 2)], k=1)
        solution = oracle_solve(inst)
        self.assertEqual(first=solution.value, second=0.0)
        self.assertEqual(first=solution.chosen, second=frozenset())

    def test_matches_subset_table(self):
        for seed in range(100):
            inst = seeded_instance(seed)
            weights = all_subset_weights(inst.P, inst.Q)
            allowed = [
                value for mask, value in enumerate(weights.tolist())
                if bin(mask).count("1") <= inst.k
            ]
            self.assertEqual(
                first=oracle_solve(inst).value, second=max(allowed), msg=f"seed {seed}"
            )

    def test_non_decreasing_in_budget(self):
        for seed in range(60):
            inst = seeded_instance(seed, n=25, max_m=6)
            values = [oracle_solve(inst.with_budget(k)).value for k in range(inst.m + 1)]
            for before, after in zip(values, values[1:]):
                self.assertLessEqual(before, after, msg=f"seed {seed}")


class TestOptimumPreserved(SimpleTestCase):
    @given(instances())
    @settings(deadline=None, max_examples=200)
    def test_ranking_and_dropping(self, inst):
        expected = oracle_solve(inst).value
        rinst = rank_transform(inst)
        self.assertEqual(first=oracle_solve(rinst.to_instance()).value, second=expected)
        self.assertEqual(
            first=oracle_solve(drop_uncovered(rinst).to_instance()).value,
            second=expected,
        )

    @given(instances())
    @settings(deadline=None, max_examples=200)
    def test_compression(self, inst):
        rinst = drop_uncovered(rank_transform(inst))
        compressed = compress(build_grid(rinst), rinst)
        reduced = Instance(P=compressed.points, Q=rinst.query_points(), k=inst.k)
        self.assertEqual(
            first=oracle_solve(reduced).value, second=oracle_solve(inst).value
        )
