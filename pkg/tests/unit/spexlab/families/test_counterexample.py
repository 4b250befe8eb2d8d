import unittest

from spexlab.families.counterexample import connected_sets, counterexample_items
from spexlab.graphs.graph import Graph
from spexlab.graphs.named import complete, cycle, path, star
from spexlab.utils.bits import full_mask


class ConnectedSetsTest(unittest.TestCase):

    def test_path(self):
        g = path(4)
        self.assertEqual([0b0011, 0b0110, 0b1100], connected_sets(g, full_mask(4), 2))
        self.assertEqual([0b0111, 0b1110], connected_sets(g, full_mask(4), 3))

    def test_restricted_to_available_vertices(self):
        self.assertEqual([0b0011], connected_sets(path(4), 0b1011, 2))

    def test_star_leaves_are_not_connected(self):
        self.assertEqual([], connected_sets(star(4), 0b11110, 2))


class CounterexampleItemsTest(unittest.TestCase):

    def test_three_short_cycles(self):
        self.assertEqual([7], counterexample_items(complete(9)))

    def test_long_cycles_do_not_count(self):
        self.assertEqual([], counterexample_items(cycle(8).union(cycle(8))))

    def test_three_claws_with_four_leaves(self):
        g = star(4).repeat(3)
        self.assertEqual([1], counterexample_items(g))

    def test_first_only(self):
        g = Graph(1).join(cycle(4)).repeat(3)
        self.assertEqual([1], counterexample_items(g, first_only=True))
        self.assertEqual([1, 7], counterexample_items(g))

    def test_edgeless(self):
        self.assertEqual([], counterexample_items(Graph(20)))
