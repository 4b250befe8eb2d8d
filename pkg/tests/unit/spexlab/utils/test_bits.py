import unittest

from hypothesis import given, strategies as st

from spexlab.utils.bits import full_mask, iter_bits, lowest_bit, popcount, to_mask


class BitsTest(unittest.TestCase):

    def test_popcount(self):
        self.assertEqual(0, popcount(0))
        self.assertEqual(3, popcount(0b10101))

    def test_iter_bits(self):
        self.assertEqual([0, 2, 4], list(iter_bits(0b10101)))
        self.assertEqual([], list(iter_bits(0)))

    def test_lowest_bit(self):
        self.assertEqual(3, lowest_bit(0b11000))

    def test_full_mask(self):
        self.assertEqual(0, full_mask(0))
        self.assertEqual(0b111, full_mask(3))

    @given(st.sets(st.integers(min_value=0, max_value=40)))
    def test_to_mask_inverts_iter_bits(self, vertices):
        self.assertEqual(sorted(vertices), list(iter_bits(to_mask(vertices))))
