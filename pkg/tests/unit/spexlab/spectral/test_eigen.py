import math
import unittest

import numpy as np

from hypothesis import given, settings, strategies as st
from numpy.testing import assert_array_almost_equal
from parameterized import parameterized

from spexlab.graphs.graph import Graph
from spexlab.graphs.named import complete, complete_bipartite, cycle, path, petersen
from spexlab.spectral.eigen import eigen_equation_residuals, eigenvalues, spectral_radius

from tests.utils.testing import brute_force_radius, random_graph


class SpectralRadiusTest(unittest.TestCase):

    @parameterized.expand([
        ('K3,7', complete_bipartite(3, 7), math.sqrt(21)),
        ('K5', complete(5), 4.0),
        ('C6', cycle(6), 2.0),
        ('P2', path(2), 1.0),
        ('E3', Graph(3), 0.0),
    ])
    def test_known_radii(self, _, g, expected):
        self.assertAlmostEqual(expected, spectral_radius(g).radius, places=10)

    @parameterized.expand([(0.0,), (0.25,), (0.5,), (0.9,)])
    def test_regular_graph_radius_is_degree(self, alpha):
        self.assertAlmostEqual(3.0, spectral_radius(petersen(), alpha).radius, places=10)

    def test_perron_vector_is_normalized(self):
        spectrum = spectral_radius(complete_bipartite(2, 5))
        self.assertTrue(np.all(spectrum.perron >= 0))
        self.assertEqual(1.0, np.max(spectrum.perron))
        assert_array_almost_equal([1.0, 1.0], spectrum.perron[:2])

    def test_perron_vector_lives_on_one_component(self):
        spectrum = spectral_radius(complete(4).union(path(2)))
        self.assertAlmostEqual(3.0, spectrum.radius)
        self.assertEqual(0, spectrum.component)
        assert_array_almost_equal([1.0, 1.0, 1.0, 1.0, 0.0, 0.0], spectrum.perron)

    def test_single_vertex(self):
        spectrum = spectral_radius(Graph(1))
        self.assertEqual(0.0, spectrum.radius)
        assert_array_almost_equal([1.0], spectrum.perron)

    def test_no_vertices(self):
        with self.assertRaises(ValueError):
            spectral_radius(Graph(0))

    def test_invalid_alpha(self):
        with self.assertRaises(ValueError):
            spectral_radius(path(3), alpha=1.0)

    def test_to_dict(self):
        data = spectral_radius(path(2)).to_dict()
        self.assertEqual({'alpha', 'lambda', 'perron', 'residual', 'component'}, set(data))
        self.assertEqual([1.0, 1.0], data['perron'])

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=12), st.floats(min_value=0.0, max_value=1.0),
           st.integers(min_value=0, max_value=10000), st.sampled_from([0.0, 0.3, 0.7]))
    def test_agrees_with_dense_eigenvalues(self, n, p, seed, alpha):
        g = random_graph(n, p, seed)
        self.assertAlmostEqual(brute_force_radius(g, alpha), spectral_radius(g, alpha).radius,
                               places=8)


class EigenvaluesTest(unittest.TestCase):

    def test_cycle(self):
        assert_array_almost_equal([-2.0, 0.0, 0.0, 2.0], eigenvalues(cycle(4)))

    def test_empty(self):
        self.assertEqual(0, eigenvalues(Graph(0)).shape[0])


class EigenEquationResidualsTest(unittest.TestCase):

    @parameterized.expand([(0.0,), (0.4,)])
    def test_residuals_are_small(self, alpha):
        g = complete(3).join(path(5))
        spectrum = spectral_radius(g, alpha)
        for residual in eigen_equation_residuals(g, spectrum):
            self.assertLess(residual, 1e-8)
