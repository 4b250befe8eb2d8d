import unittest

from hypothesis import given, settings, strategies as st
from parameterized import parameterized

from spexlab.graphs.canonical import (canonical_certificate,
                                      canonical_form,
                                      canonical_graph,
                                      canonical_labeling,
                                      canonical_last_vertex,
                                      canonical_order,
                                      from_certificate,
                                      is_isomorphic,
                                      refine_partition)
from spexlab.graphs.graph import Graph
from spexlab.graphs.named import complete_bipartite, cycle, path, petersen, star

from tests.utils.testing import (atlas_graphs,
                                 brute_force_isomorphic,
                                 random_graph,
                                 random_relabel)


class RefinePartitionTest(unittest.TestCase):

    def test_refine_by_degree(self):
        cells = refine_partition(star(3).adj, [[0, 1, 2, 3]])
        self.assertEqual([[0], [1, 2, 3]], cells)

    def test_regular_graph_is_not_split(self):
        self.assertEqual([list(range(5))], refine_partition(cycle(5).adj, [list(range(5))]))

    def test_path_cells(self):
        cells = refine_partition(path(4).adj, [[0, 1, 2, 3]])
        self.assertEqual([[1, 2], [0, 3]], cells)


class CanonicalLabelingTest(unittest.TestCase):

    def test_empty_graph(self):
        self.assertEqual((), canonical_order(Graph(0))[0])
        self.assertEqual((0, ()), canonical_certificate(Graph(0)))

    def test_labeling_is_permutation(self):
        perm = canonical_labeling(petersen())
        self.assertEqual(list(range(10)), sorted(perm))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=10), st.floats(min_value=0.0, max_value=1.0),
           st.integers(min_value=0, max_value=10000), st.integers(min_value=0, max_value=10000))
    def test_certificate_is_invariant_under_relabelling(self, n, p, seed, relabel_seed):
        g = random_graph(n, p, seed)
        h = random_relabel(g, relabel_seed)
        self.assertEqual(canonical_certificate(g), canonical_certificate(h))
        self.assertEqual(canonical_graph(g), canonical_graph(h))
        self.assertEqual(canonical_form(g), canonical_form(h))

    @parameterized.expand([(4,), (5,), (6,)])
    def test_certificates_separate_atlas_classes(self, n):
        graphs = atlas_graphs(n)
        certificates = {canonical_certificate(g) for g in graphs}
        self.assertEqual(len(graphs), len(certificates))

    def test_canonical_graph_is_isomorphic(self):
        g = random_graph(9, 0.4, 3)
        self.assertTrue(brute_force_isomorphic(g, canonical_graph(g)))

    def test_from_certificate(self):
        g = random_graph(8, 0.5, 11)
        n, certificate = canonical_certificate(g)
        self.assertEqual(canonical_graph(g), from_certificate(n, certificate))

    def test_canonical_last_vertex_candidates(self):
        g = star(3)
        self.assertEqual(0, canonical_last_vertex(g, candidates=0b0001))
        self.assertIn(canonical_last_vertex(g), [0, 1, 2, 3])
        self.assertIsNone(canonical_last_vertex(g, candidates=0))


class IsIsomorphicTest(unittest.TestCase):

    def test_isomorphic(self):
        self.assertTrue(is_isomorphic(cycle(6), random_relabel(cycle(6), 1)))

    def test_same_degrees_not_isomorphic(self):
        self.assertFalse(is_isomorphic(cycle(6), cycle(3).repeat(2)))

    def test_different_size(self):
        self.assertFalse(is_isomorphic(path(4), star(3).union(Graph(0))))
        self.assertFalse(is_isomorphic(complete_bipartite(2, 2), path(4)))
