import unittest

from parameterized import parameterized

from spexlab.graphs.graph import Graph
from spexlab.graphs.named import cycle, double_star, path, spider, star
from spexlab.verification.exceptions import NotATreeError
from spexlab.verification.trees import (good_tree,
                                        good_tree_consistency,
                                        good_tree_sides,
                                        is_nondecreasing_within,
                                        tree_edge_counts,
                                        tree_from_prufer,
                                        tree_stats,
                                        tree_trend,
                                        TreeStats)


class GoodTreeTest(unittest.TestCase):

    @parameterized.expand([
        ('double_star', double_star(2, 2), True),
        ('unbalanced_double_star', double_star(2, 3), True),
        ('star', star(3), False),
        ('path', path(5), False),
        ('spider', spider([2, 2, 1]), False),
        ('long_leg_spider', spider([3, 1, 1]), False),
    ])
    def test_good_tree(self, _, t, expected):
        self.assertEqual(expected, good_tree(t))

    def test_sides(self):
        a, b = good_tree_sides(double_star(2, 3))
        self.assertEqual(3, len(a))
        self.assertEqual(4, len(b))
        self.assertIn(0, b)

    @parameterized.expand([('cycle', cycle(4)), ('forest', Graph(2)), ('empty', Graph(0))])
    def test_not_a_tree(self, _, g):
        with self.assertRaises(NotATreeError):
            good_tree(g)

    def test_consistency(self):
        consistency = good_tree_consistency(double_star(2, 2))
        self.assertEqual(2, consistency.k)
        self.assertEqual([4, 5, 6, 7, 8], consistency.orders)
        self.assertTrue(consistency.consistent)

    def test_consistency_requires_good_tree(self):
        with self.assertRaises(ValueError):
            good_tree_consistency(star(3))


class TreeStatsTest(unittest.TestCase):

    def test_tree_from_prufer(self):
        t = tree_from_prufer([0, 0], 4)
        self.assertEqual(3, t.num_edges)
        self.assertEqual(3, t.degree(0))
        self.assertEqual(Graph(1), tree_from_prufer([], 1))
        self.assertEqual(1, tree_from_prufer([], 2).num_edges)

    def test_exhaustive_small_order(self):
        stats = tree_stats(4)
        self.assertTrue(stats.exhaustive)
        self.assertEqual(16, stats.samples)
        self.assertEqual(0, stats.good_count)
        self.assertEqual(0.0, stats.half_width)

    def test_exhaustive_six(self):
        # the 90 labelled copies of the double star D_{2,2}
        stats = tree_stats(6, check_consistency=True)
        self.assertEqual(1296, stats.samples)
        self.assertEqual(90, stats.good_count)
        self.assertAlmostEqual(90 / 1296, stats.fraction)
        self.assertEqual('5/72', stats.exact_fraction)
        self.assertEqual('5/72', stats.to_dict()['exact_fraction'])
        self.assertEqual(1, stats.consistency_checked)
        self.assertEqual([], stats.consistency_failures)

    def test_sampling_is_deterministic(self):
        first = tree_stats(9, samples=300, seed=7, exhaustive=False)
        second = tree_stats(9, samples=300, seed=7, exhaustive=False)
        self.assertEqual(first.to_dict(), second.to_dict())
        self.assertFalse(first.exhaustive)
        self.assertIsNone(first.to_dict()['exact_fraction'])
        self.assertEqual(300, first.samples)
        self.assertGreaterEqual(first.half_width, 0.0)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            tree_stats(0)
        with self.assertRaises(ValueError):
            tree_stats(10, samples=0, exhaustive=False)

    def test_trend(self):
        stats = tree_trend([12, 8], samples=50, seed=1)
        self.assertEqual([8, 12], [s.m for s in stats])
        self.assertTrue(all(not s.exhaustive for s in stats))

    def test_is_nondecreasing_within(self):
        def make(m, fraction, half_width):
            return TreeStats(m, 100, int(100 * fraction), fraction, half_width, 42)

        self.assertTrue(is_nondecreasing_within([make(8, 0.2, 0.01), make(16, 0.3, 0.01)]))
        self.assertTrue(is_nondecreasing_within([make(8, 0.2, 0.05), make(16, 0.15, 0.05)]))
        self.assertFalse(is_nondecreasing_within([make(8, 0.4, 0.01), make(16, 0.2, 0.01)]))
        self.assertTrue(is_nondecreasing_within([]))


class TreeEdgeCountsTest(unittest.TestCase):

    @parameterized.expand([(4, (8, 3, 4)), (5, (50, 15, 20))])
    def test_counts(self, n, expected):
        counts = tree_edge_counts(n)
        self.assertEqual(expected, (counts.single, counts.incident, counts.disjoint))
        self.assertTrue(counts.matches)
        self.assertEqual(list(expected), counts.to_dict()['expected'])

    @parameterized.expand([(3,), (9,)])
    def test_invalid_order(self, n):
        with self.assertRaises(ValueError):
            tree_edge_counts(n)
