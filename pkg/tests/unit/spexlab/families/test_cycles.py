import unittest

from hypothesis import given, settings, strategies as st
from parameterized import parameterized

from spexlab.exceptions import CapExceededError
from spexlab.families.cycles import (chord_count,
                                     cycle_masks,
                                     cycle_spectrum,
                                     max_incident_chords,
                                     minimal_masks,
                                     pack_disjoint)
from spexlab.graphs.graph import Graph
from spexlab.graphs.named import complete, complete_bipartite, cycle, path, petersen, star
from spexlab.utils.bits import full_mask

from tests.utils.testing import brute_force_cycle_lengths, random_graph


class CycleSpectrumTest(unittest.TestCase):

    @parameterized.expand([
        ('path', path(6), set()),
        ('star', star(5), set()),
        ('cycle', cycle(6), {6}),
        ('k4', complete(4), {3, 4}),
        ('k33', complete_bipartite(3, 3), {4, 6}),
    ])
    def test_known_spectra(self, _, g, expected):
        self.assertEqual(expected, set(cycle_spectrum(g)))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=3, max_value=8), st.floats(min_value=0.2, max_value=0.8),
           st.integers(min_value=0, max_value=10000))
    def test_agrees_with_brute_force(self, n, p, seed):
        g = random_graph(n, p, seed)
        self.assertEqual(brute_force_cycle_lengths(g), set(cycle_spectrum(g)))

    def test_petersen_graph(self):
        g = petersen()
        self.assertEqual(brute_force_cycle_lengths(g), set(cycle_spectrum(g)))
        self.assertNotIn(4, cycle_spectrum(g))

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            cycle_masks(Graph(17))

    def test_max_length(self):
        masks = cycle_masks(complete(5), max_length=3)
        self.assertEqual(10, len(masks))


class ChordTest(unittest.TestCase):

    def test_cycle_has_no_chords(self):
        self.assertEqual(0, chord_count(cycle(5), full_mask(5)))

    def test_k4_chords(self):
        k4 = complete(4)
        self.assertEqual(2, chord_count(k4, full_mask(4)))
        self.assertEqual(1, max_incident_chords(k4, full_mask(4)))

    def test_wheel_chords_meet_hub(self):
        wheel = Graph(1).join(cycle(5))
        self.assertEqual(4, chord_count(wheel, full_mask(6)))
        self.assertEqual(3, max_incident_chords(wheel, full_mask(6)))


class PackingTest(unittest.TestCase):

    def test_minimal_masks(self):
        self.assertEqual([0b0011, 0b1100], minimal_masks([0b0111, 0b0011, 0b1100, 0b1111]))

    def test_pack_disjoint(self):
        masks = [0b000111, 0b111000, 0b011100]
        self.assertTrue(pack_disjoint([masks, masks]))
        self.assertFalse(pack_disjoint([masks, masks, masks]))

    def test_pack_disjoint_with_used_vertices(self):
        masks = [0b000111, 0b111000]
        self.assertFalse(pack_disjoint([masks, masks], used=0b000001))

    def test_pack_disjoint_accept(self):
        masks = [0b0011, 0b1100]
        self.assertTrue(pack_disjoint([masks]))
        self.assertFalse(pack_disjoint([masks], accept=lambda used: used & 0b0101 == 0b0101))
