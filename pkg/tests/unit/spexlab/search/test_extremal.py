import math
import unittest

from parameterized import parameterized

from spexlab.families.base import FiniteList
from spexlab.graphs.graph import Graph
from spexlab.graphs.graph6 import graph6_decode
from spexlab.graphs.named import complete, complete_bipartite, empty, matching, star
from spexlab.search.exceptions import NoFreeGraphError
from spexlab.search.extremal import ex, radius_polynomial, resolve_ties, spex
from spexlab.spectral.polynomials import Polynomial

from tests.utils.testing import brute_force_isomorphic


class ExTest(unittest.TestCase):

    @parameterized.expand([(5,), (6,), (7,)])
    def test_matching_two_edges(self, n):
        report = ex(n, FiniteList([matching(4)], names=['M4']))
        self.assertEqual(n - 1, report.optimum)
        self.assertEqual(1, len(report.witnesses))
        self.assertTrue(brute_force_isomorphic(star(n - 1), graph6_decode(report.witnesses[0])))
        self.assertEqual('list:M4', report.family)
        self.assertEqual('ex', report.query)

    def test_tied_witnesses(self):
        report = ex(4, FiniteList([matching(4)]))
        self.assertEqual(3, report.optimum)
        self.assertEqual(2, len(report.witnesses))
        self.assertEqual([3, 3], report.values)

    def test_triangle_free(self):
        report = ex(6, FiniteList([complete(3)]))
        self.assertEqual(9, report.optimum)
        self.assertEqual(1, len(report.witnesses))
        self.assertTrue(brute_force_isomorphic(complete_bipartite(3, 3),
                                               graph6_decode(report.witnesses[0])))

    def test_connected(self):
        report = ex(5, FiniteList([matching(4)]), connected=True)
        self.assertEqual(4, report.optimum)
        self.assertEqual('connected', report.restricted_to)

    def test_no_free_graph(self):
        with self.assertRaises(NoFreeGraphError):
            ex(3, FiniteList([empty(2)]))


class SpexTest(unittest.TestCase):

    def test_triangle_free(self):
        report = spex(6, FiniteList([complete(3)]))
        self.assertAlmostEqual(3.0, report.optimum)
        self.assertEqual(1, len(report.witnesses))
        self.assertEqual([], report.flags)

    def test_star_is_unique_above_five(self):
        report = spex(6, FiniteList([matching(4)]))
        self.assertAlmostEqual(math.sqrt(5), report.optimum)
        self.assertTrue(brute_force_isomorphic(star(5), graph6_decode(report.witnesses[0])))

    def test_exact_tie_is_flagged(self):
        with self.assertWarns(RuntimeWarning):
            report = spex(5, FiniteList([matching(4)]))
        self.assertAlmostEqual(2.0, report.optimum)
        self.assertEqual(['tie'], report.flags)
        self.assertEqual(2, len(report.witnesses))

    def test_alpha_objective(self):
        report = spex(5, FiniteList([complete(3)]), alpha=0.5)
        self.assertEqual('lambda(0.5)', report.objective)
        self.assertGreater(report.optimum, 0)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            spex(5, FiniteList([complete(3)]), alpha=1.0)
        with self.assertRaises(ValueError):
            spex(0, FiniteList([complete(3)]))


class ResolveTiesTest(unittest.TestCase):

    def test_radius_polynomial(self):
        self.assertEqual(Polynomial([-4, 0, 1]), radius_polynomial(star(4)))

    def test_equal_radii_are_kept(self):
        graphs = [star(4), complete(3).union(Graph(2))]
        best, radius = resolve_ties(graphs)
        self.assertEqual(2, len(best))
        self.assertAlmostEqual(2.0, radius)

    def test_larger_radius_wins(self):
        best, radius = resolve_ties([star(4), complete_bipartite(2, 3)])
        self.assertEqual(1, len(best))
        self.assertAlmostEqual(math.sqrt(6), radius)
