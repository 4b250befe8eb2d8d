import unittest

from parameterized import parameterized

from spexlab.exceptions import CapExceededError
from spexlab.families.containment import (contains_subgraph,
                                          find_subgraph,
                                          has_minor,
                                          has_subdivision)
from spexlab.graphs.graph import Graph
from spexlab.graphs.named import (complete,
                                  complete_bipartite,
                                  cycle,
                                  matching,
                                  path,
                                  petersen,
                                  spider,
                                  star)

from tests.utils.testing import atlas_graphs, brute_force_contains


PATTERNS = [
    ('P3', path(3)),
    ('P4', path(4)),
    ('K1,3', star(3)),
    ('C4', cycle(4)),
    ('K3', complete(3)),
    ('M4', matching(4)),
    ('S1,1,2', spider((1, 1, 2))),
]


class ContainsSubgraphTest(unittest.TestCase):

    @parameterized.expand(PATTERNS)
    def test_agrees_with_brute_force_on_atlas(self, _, f):
        for g in atlas_graphs(5) + atlas_graphs(6):
            self.assertEqual(brute_force_contains(g, f), contains_subgraph(g, f),
                             msg=f'host edges: {g.edges()}')

    def test_larger_pattern_is_never_contained(self):
        self.assertFalse(contains_subgraph(complete(4), path(5)))

    def test_isolated_vertices_in_pattern(self):
        self.assertTrue(contains_subgraph(complete(3), matching(3)))
        self.assertFalse(contains_subgraph(complete(3), matching(4)))

    def test_find_subgraph_maps_edges_to_edges(self):
        g = petersen()
        f = cycle(5)
        mapping = find_subgraph(g, f)
        self.assertIsNotNone(mapping)
        self.assertEqual(f.n, len(set(mapping)))
        for u, v in f.edges():
            self.assertTrue(g.has_edge(mapping[u], mapping[v]))

    def test_find_subgraph_returns_none(self):
        self.assertIsNone(find_subgraph(petersen(), cycle(4)))


class MinorTest(unittest.TestCase):

    def test_triangle_minor_of_cycle(self):
        self.assertTrue(has_minor(cycle(5), complete(3)))

    def test_forest_has_no_triangle_minor(self):
        self.assertFalse(has_minor(path(6), complete(3)))
        self.assertFalse(has_minor(star(5), complete(3)))

    def test_k4_minor_of_k33(self):
        self.assertTrue(has_minor(complete_bipartite(3, 3), complete(4)))

    def test_cycle_has_no_k4_minor(self):
        self.assertFalse(has_minor(cycle(7), complete(4)))

    def test_host_cap(self):
        with self.assertRaises(CapExceededError):
            has_minor(Graph(15), complete(3))

    def test_pattern_cap(self):
        with self.assertRaises(CapExceededError):
            has_minor(complete(10), complete(9))


class SubdivisionTest(unittest.TestCase):

    def test_k4_subdivision_in_k33(self):
        self.assertTrue(has_subdivision(complete_bipartite(3, 3), complete(4)))

    def test_long_cycle_is_subdivision_of_short_cycle(self):
        self.assertTrue(has_subdivision(cycle(7), cycle(4)))
        self.assertFalse(has_subdivision(cycle(3), cycle(4)))

    def test_spider_is_subdivision_of_claw(self):
        self.assertTrue(has_subdivision(spider((2, 2, 3)), star(3)))
        self.assertFalse(has_subdivision(path(7), star(3)))

    def test_no_k5_subdivision_in_cubic_graph(self):
        self.assertFalse(has_subdivision(petersen(), complete(5)))

    def test_host_cap(self):
        with self.assertRaises(CapExceededError):
            has_subdivision(Graph(15), complete(3))
