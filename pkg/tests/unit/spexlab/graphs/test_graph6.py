import os
import tempfile
import unittest

from hypothesis import given, settings, strategies as st

from spexlab.graphs.exceptions import Graph6FormatError
from spexlab.graphs.graph6 import graph6_decode, graph6_encode, read_graph6_file
from spexlab.graphs.named import complete, complete_bipartite, path, petersen

from tests.utils.testing import random_graph


class Graph6Test(unittest.TestCase):

    def test_encode_known_codes(self):
        self.assertEqual('Bw', graph6_encode(complete(3)))
        self.assertEqual('C~', graph6_encode(complete(4)))

    def test_decode_keeps_labelling(self):
        g = path(5)
        self.assertEqual(g, graph6_decode(graph6_encode(g)))

    def test_decode_header(self):
        self.assertEqual(complete(3), graph6_decode('>>graph6<<Bw\n'))

    def test_decode_bytes(self):
        self.assertEqual(complete(4), graph6_decode(b'C~'))

    def test_decode_empty(self):
        with self.assertRaises(Graph6FormatError):
            graph6_decode('')

    def test_decode_invalid_character(self):
        with self.assertRaises(Graph6FormatError):
            graph6_decode('K3,7')

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=1, max_value=12), st.floats(min_value=0.0, max_value=1.0),
           st.integers(min_value=0, max_value=1000))
    def test_decode_inverts_encode(self, n, p, seed):
        g = random_graph(n, p, seed)
        self.assertEqual(g, graph6_decode(graph6_encode(g)))

    def test_read_graph6_file(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path_ = os.path.join(tmp_dir, 'family.g6')
            with open(path_, 'w', encoding='utf-8') as f:
                f.write(graph6_encode(petersen()) + '\n\n')
                f.write(graph6_encode(complete_bipartite(2, 3)) + '\n')
            graphs = read_graph6_file(path_)
        self.assertEqual([petersen(), complete_bipartite(2, 3)], graphs)
