# Third-Party
from hypothesis import given, settings
import numpy as np

# Django
from django.test import SimpleTestCase

# Local
from dominance.exceptions import NotRankedError
from dominance.geometry import coverage_matrix
from dominance.ranking import covered_mask, drop_uncovered, rank_transform
from .helpers import instances, make_instance, seeded_instance


class TestRankTransform(SimpleTestCase):
    def test_ties_broken_by_id(self):
        inst = make_instance(P=[], Q=[(5, 1), (5, 2), (3, 3)], k=1)
        rinst = rank_transform(inst)
        self.assertEqual(first=rinst.qx.tolist(), second=[4, 6, 2])
        self.assertEqual(first=rinst.qy.tolist(), second=[2, 4, 6])

    def test_point_on_query_line_stays_below(self):
        inst = make_instance(P=[(5, 5, 1)], Q=[(5, 5)], k=1)
        rinst = rank_transform(inst)
        self.assertEqual(first=(rinst.px[0], rinst.py[0]), second=(1, 1))

    def test_point_beyond_every_query(self):
        inst = make_instance(P=[(9, 9, 1)], Q=[(5, 5), (1, 7)], k=1)
        rinst = rank_transform(inst)
        self.assertEqual(first=(rinst.px[0], rinst.py[0]), second=(5, 5))

    def test_parity(self):
        rinst = rank_transform(seeded_instance(seed=11, n=40))
        self.assertTrue(np.all(rinst.qx % 2 == 0))
        self.assertTrue(np.all(rinst.px % 2 == 1))
        rinst.check_ranked()

    def test_y_order_decreasing(self):
        rinst = rank_transform(seeded_instance(seed=5))
        ys = rinst.qy[rinst.y_order]
        self.assertTrue(np.all(np.diff(ys) < 0))

    def test_back_map_keeps_original_points(self):
        inst = make_instance(P=[], Q=[(0.5, 2.5), (7, -1)], k=1)
        rinst = rank_transform(inst)
        self.assertEqual(first=rinst.back_map[1], second=inst.Q[1])

    @given(instances(max_n=25, max_m=8, coord=4))
    @settings(deadline=None, max_examples=500)
    def test_dominance_preserved_under_ties(self, inst):
        rinst = rank_transform(inst)
        self.assertTrue(np.array_equal(
            coverage_matrix(inst.P, inst.Q),
            coverage_matrix(rinst.weighted_points(), rinst.query_points()),
        ))


class TestDropUncovered(SimpleTestCase):
    def test_drops_only_uncovered(self):
        inst = make_instance(
            P=[(1, 1, 5), (3, 3, 5), (4, 0, -1)], Q=[(2, 2), (4, 1)], k=2
        )
        rinst = drop_uncovered(rank_transform(inst))
        self.assertEqual(first=rinst.n, second=2)
        self.assertEqual(first=sorted(rinst.pw.tolist()), second=[-1.0, 5.0])

    @given(instances())
    @settings(deadline=None, max_examples=200)
    def test_mask_matches_coverage(self, inst):
        rinst = rank_transform(inst)
        expected = coverage_matrix(inst.P, inst.Q).any(axis=1).tolist()
        self.assertEqual(
            first=covered_mask(rinst).tolist(), second=expected
        )

    def test_check_ranked_rejects_even_points(self):
        rinst = rank_transform(make_instance(P=[(1, 1, 1)], Q=[(2, 2)], k=1))
        with self.assertRaises(NotRankedError):
            rinst.with_points([2], [1], [1]).check_ranked()

    def test_to_instance_keeps_ids(self):
        inst = make_instance(P=[(1, 1, 2)], Q=[(3, 3), (1, 4)], k=2)
        ranked = rank_transform(inst).to_instance()
        self.assertEqual(first=[q.id for q in ranked.Q], second=[0, 1])
        self.assertEqual(first=ranked.k, second=2)

    @given(instances(max_n=25, max_m=8, coord=4))
    @settings(deadline=None, max_examples=200)
    def test_ranking_twice_changes_nothing(self, inst):
        once = rank_transform(inst)
        twice = rank_transform(once.to_instance())
        for name in ("px", "py", "qx", "qy"):
            self.assertEqual(
                first=getattr(twice, name).tolist(), second=getattr(once, name).tolist(),
                msg=name,
            )
        self.assertTrue(np.array_equal(
            coverage_matrix(inst.P, inst.Q),
            coverage_matrix(twice.weighted_points(), twice.query_points()),
        ))
