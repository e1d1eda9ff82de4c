# Third-Party
from hypothesis import given, settings

# Django
from django.test import SimpleTestCase

# Local
from dominance.generators import GeneratorSpec, generate
from dominance.geometry import weight_of_dom
from dominance.oracle import oracle_solve
from dominance.ranking import drop_uncovered, rank_transform
from dominance.rho import make_sweep_factory
from dominance.solver import (
    DpState, add_sentinel, candidate_set, run_pipeline, solve, solve_pipeline,
)
from .helpers import all_subset_weights, instances, make_instance, seeded_instance


def achieved(inst, solution) -> float:
    by_id = {q.id: q for q in inst.Q}
    return weight_of_dom(inst.P, [by_id[i] for i in solution.chosen])


class TestSentinel(SimpleTestCase):
    def setUp(self) -> None:
        self.rinst = add_sentinel(rank_transform(make_instance(
            P=[(2, 5, 7)], Q=[(3, 10), (1, 8), (5, 6), (2, 4), (4, 2)], k=2
        )))

    def test_sentinel_position(self):
        self.assertEqual(first=self.rinst.sentinel, second=(13, -1))
        self.assertEqual(
            first=self.rinst.x_by_y_index(), second=[0, 6, 2, 10, 4, 8, 13]
        )

    def test_candidate_set(self):
        self.assertEqual(first=candidate_set(self.rinst, 2), second=[2])
        self.assertEqual(first=candidate_set(self.rinst, 3), second=[1, 2, 3])
        self.assertEqual(first=candidate_set(self.rinst, 5), second=[1, 2, 4, 5])
        self.assertEqual(
            first=candidate_set(self.rinst, 6), second=[1, 2, 3, 4, 5, 6]
        )

    def test_sentinel_survives_point_changes(self):
        self.assertEqual(
            first=drop_uncovered(self.rinst).sentinel, second=(13, -1)
        )


class TestDpState(SimpleTestCase):
    def test_initial_layer_is_zero(self):
        xs = [0, 6, 2, 10, 4, 8, 13]
        state = DpState.initial(xs)
        self.assertEqual(first=state.layer, second=0)
        self.assertEqual(first=state.T_cur, second=[0.0] * len(xs))
        self.assertEqual(first=state.pred, second={})

    def test_links_stay_in_candidate_set(self):
        for seed in range(80):
            inst = seeded_instance(seed, n=30, max_m=8)
            rinst = add_sentinel(drop_uncovered(rank_transform(inst.with_budget(inst.m))))
            factory = make_sweep_factory(rinst)
            state = DpState.initial(rinst.x_by_y_index())
            for _ in range(inst.m):
                state.run_layer(factory())
            for layer, links in state.pred.items():
                for i in range(2, len(links)):
                    if links[i] != i:
                        self.assertIn(
                            links[i], candidate_set(rinst, i),
                            msg=f"seed {seed}, layer {layer}, row {i}",
                        )


class TestSolve(SimpleTestCase):
    def test_two_point_example(self):
        inst = make_instance(P=[(1, 1, 5), (3, 3, 5)], Q=[(2, 2), (4, 1)], k=1)
        for k in (1, 2):
            solution = solve_pipeline(inst.with_budget(k))
            self.assertEqual(first=solution.value, second=5.0)
            self.assertEqual(first=achieved(inst, solution), second=5.0)

    def test_staircase_example(self):
        inst = make_instance(
            P=[(2, 5, 7), (0, 9, 1), (4, 3, -2)],
            Q=[(3, 10), (1, 8), (5, 6), (2, 4), (4, 2)],
            k=1,
        )
        solution = solve_pipeline(inst)
        self.assertEqual(first=solution.value, second=8.0)
        self.assertEqual(first=solution.chosen, second=frozenset({0}))

    def test_zero_budget(self):
        inst = make_instance(P=[(1, 1, 5)], Q=[(2, 2)], k=0)
        solution = solve_pipeline(inst)
        self.assertEqual(first=solution.value, second=0.0)
        self.assertEqual(first=solution.chosen, second=frozenset())

    def test_all_negative_weights_choose_nothing(self):
        inst = make_instance(
            P=[(1, 1, -5), (2, 0, -1), (0, 3, -2)], Q=[(2, 2), (3, 3), (1, 4)], k=3
        )
        for use_compression in (True, False):
            solution = solve_pipeline(inst, use_compression)
            self.assertEqual(first=solution.value, second=0.0)
            self.assertEqual(first=solution.chosen, second=frozenset())

    def test_empty_point_set(self):
        inst = make_instance(P=[], Q=[(2, 2), (3, 1)], k=2)
        self.assertEqual(first=solve_pipeline(inst).value, second=0.0)

    def test_budget_beyond_m(self):
        inst = make_instance(P=[(1, 1, 2), (5, 0, 3)], Q=[(2, 2), (6, 1)], k=9)
        self.assertEqual(first=solve_pipeline(inst).value, second=5.0)

    def test_layer_values_non_decreasing(self):
        for seed in range(100):
            inst = seeded_instance(seed, n=30, max_m=8)
            rinst = add_sentinel(drop_uncovered(rank_transform(inst.with_budget(inst.m))))
            values: list[float] = []
            solution = solve(rinst, layer_values=values)
            self.assertEqual(first=len(values), second=inst.m)
            self.assertEqual(first=values[-1], second=solution.value)
            for before, after in zip(values, values[1:]):
                self.assertLessEqual(before, after)

    def test_checkpointed_reconstruction_matches(self):
        for seed in range(200):
            inst = seeded_instance(seed, n=25, max_m=8)
            full = solve_pipeline(inst)
            checkpointed = solve_pipeline(inst, pred_limit=0)
            self.assertEqual(first=checkpointed.value, second=full.value)
            self.assertLessEqual(len(checkpointed.chosen), inst.k)
            self.assertEqual(
                first=achieved(inst, checkpointed), second=checkpointed.value
            )

    def test_incremental_sweep_matches(self):
        for seed in range(100):
            inst = seeded_instance(seed)
            self.assertEqual(
                first=solve_pipeline(inst, memory_budget=0).value,
                second=solve_pipeline(inst).value,
            )

    def test_skyline_unit_weight_covers_everything(self):
        for seed in range(20):
            skyline = generate(GeneratorSpec(
                family="skyline-unit-weight", n=40, m=1, k=1, seed=seed,
                coord_range=50,
            ))
            inst = skyline.with_budget(skyline.m)
            self.assertEqual(first=solve_pipeline(inst).value, second=40.0)

    def test_skyline_unit_weight_small_budgets(self):
        for seed in range(60):
            inst = generate(GeneratorSpec(
                family="skyline-unit-weight", n=5 + seed % 36, m=1, k=seed % 4,
                seed=seed, coord_range=30,
            ))
            weights = all_subset_weights(inst.P, inst.Q)
            best = max(
                value for mask, value in enumerate(weights.tolist())
                if bin(mask).count("1") <= inst.k
            )
            self.assertEqual(first=solve_pipeline(inst).value, second=best)
            self.assertEqual(first=oracle_solve(inst).value, second=best)


class TestAgainstOracle(SimpleTestCase):
    def test_seeded_corpus(self):
        for seed in range(1000):
            inst = seeded_instance(seed, n=40, max_m=8, coord_range=20)
            expected = oracle_solve(inst).value
            for use_compression in (True, False):
                solution = solve_pipeline(inst, use_compression)
                self.assertEqual(
                    first=solution.value, second=expected, msg=f"seed {seed}"
                )
                self.assertLessEqual(len(solution.chosen), inst.k)
                self.assertEqual(first=achieved(inst, solution), second=expected)

    def test_negative_mix_corpus(self):
        for seed in range(200):
            inst = seeded_instance(seed, n=30, family="negative-mix")
            self.assertEqual(
                first=solve_pipeline(inst).value, second=oracle_solve(inst).value,
                msg=f"seed {seed}",
            )

    @given(instances())
    @settings(deadline=None, max_examples=300)
    def test_tie_heavy_instances(self, inst):
        solution = solve_pipeline(inst)
        self.assertEqual(first=solution.value, second=oracle_solve(inst).value)
        self.assertEqual(first=achieved(inst, solution), second=solution.value)


class TestRunPipeline(SimpleTestCase):
    def test_report(self):
        inst = make_instance(
            P=[(1, 1, 5), (3, 3, 5), (0, 0, 1)], Q=[(2, 2), (4, 1)], k=1
        )
        report = run_pipeline(inst)
        self.assertEqual(first=report.retained, second=2)
        self.assertEqual(first=report.cells, second=1)
        self.assertEqual(first=report.compressed_size, second=1)
        self.assertEqual(first=report.solution.value, second=6.0)
        self.assertTrue(
            {"transform", "drop", "grid", "compress", "prefix", "dp", "reconstruct"}
            <= set(report.timings)
        )

    def test_report_without_compression(self):
        inst = make_instance(P=[(1, 1, 5)], Q=[(2, 2)], k=1)
        report = run_pipeline(inst, use_compression=False)
        self.assertIsNone(report.compressed_size)
        self.assertNotIn("compress", report.timings)
