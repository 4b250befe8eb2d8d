import math
import unittest

from fractions import Fraction

import pytest

from hypothesis import given, settings, strategies as st

from spexlab.graphs.named import complete_bipartite, petersen
from spexlab.search.enumeration import iter_graphs
from spexlab.spectral.eigen import spectral_radius
from spexlab.spectral.exceptions import NoRootError
from spexlab.spectral.partitions import equitable_partition, quotient
from spexlab.spectral.polynomials import (char_poly,
                                          check_second_root_below,
                                          compare_max_roots,
                                          count_roots_above,
                                          count_roots_between,
                                          max_real_root,
                                          Polynomial,
                                          sturm_sequence)


X = Polynomial([0, 1])


def from_roots(*roots):
    p = Polynomial([1])
    for root in roots:
        p = p * (X - root)
    return p


class PolynomialTest(unittest.TestCase):

    def test_trailing_zeros_are_dropped(self):
        p = Polynomial([1, 2, 0, 0])
        self.assertEqual(1, p.degree)
        self.assertEqual(-1, Polynomial([0]).degree)

    def test_arithmetic(self):
        p = Polynomial([1, 1])
        self.assertEqual(Polynomial([1, 2, 1]), p * p)
        self.assertEqual(Polynomial([2, 1]), p + 1)
        self.assertEqual(Polynomial([0, -1]), 1 - p)
        self.assertEqual(Polynomial([0]), p - p)

    def test_division(self):
        quotient_, remainder = divmod(from_roots(1, 2, 3), from_roots(1, 2))
        self.assertEqual(from_roots(3), quotient_)
        self.assertTrue(remainder.is_zero())
        self.assertEqual(Polynomial([2]), (X * X + 1) % (X - 1))

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            divmod(X, Polynomial([]))

    def test_from_descending(self):
        self.assertEqual(Polynomial([-2, 0, 1]), Polynomial.from_descending([1, 0, -2]))

    def test_evaluation(self):
        p = from_roots(1, 2)
        self.assertEqual(Fraction(0), p(2))
        self.assertEqual(2, p(3))
        self.assertEqual(1, p.sign_at(0))
        self.assertEqual(-1, p.sign_at(Fraction(3, 2)))
        self.assertAlmostEqual(2.0, p.evaluate_float(3.0))

    def test_gcd_and_squarefree(self):
        p = from_roots(1, 1, 2)
        self.assertEqual(from_roots(1), p.gcd(p.derivative()))
        self.assertEqual(from_roots(1, 2), p.squarefree())

    def test_str(self):
        self.assertEqual('x^2 - 2', str(Polynomial([-2, 0, 1])))
        self.assertEqual('-x + 1/2', str(Polynomial([Fraction(1, 2), -1])))
        self.assertEqual('0', str(Polynomial([])))


class CharPolyTest(unittest.TestCase):

    def test_two_by_two(self):
        self.assertEqual(Polynomial([-1, 0, 1]), char_poly([[0, 1], [1, 0]]))

    def test_complete_bipartite_quotient(self):
        q = quotient(complete_bipartite(3, 7), [range(3), range(3, 10)])
        self.assertEqual(Polynomial([-21, 0, 1]), char_poly(q))

    def test_triangular(self):
        self.assertEqual(from_roots(2, 3, 5), char_poly([[2, 1, 7], [0, 3, 4], [0, 0, 5]]))

    def test_petersen_quotient(self):
        q = quotient(petersen(), equitable_partition(petersen()))
        self.assertEqual(from_roots(3), char_poly(q))


class SturmTest(unittest.TestCase):

    def test_counts(self):
        sequence = sturm_sequence(from_roots(-1, 0, 1))
        self.assertEqual(2, count_roots_above(sequence, Fraction(-1, 2)))
        self.assertEqual(3, count_roots_above(sequence, -5))
        self.assertEqual(2, count_roots_between(sequence, -2, 0))
        self.assertEqual(0, count_roots_between(sequence, 2, 5))


class MaxRealRootTest(unittest.TestCase):

    def test_irrational_root(self):
        self.assertAlmostEqual(math.sqrt(2), max_real_root(X * X - 2), places=12)

    def test_repeated_root(self):
        self.assertAlmostEqual(3.0, max_real_root(from_roots(1, 3, 3)), places=12)

    def test_lower_bound(self):
        self.assertAlmostEqual(3.0, max_real_root(from_roots(1, 3), lower=2), places=12)
        with self.assertRaises(NoRootError):
            max_real_root(from_roots(1, 3), lower=4)

    def test_constant_has_no_root(self):
        with self.assertRaises(NoRootError):
            max_real_root(Polynomial([5]))

    def test_no_real_root(self):
        with self.assertRaises(NoRootError):
            max_real_root(X * X + 1)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=5))
    def test_integer_roots(self, roots):
        self.assertAlmostEqual(max(roots), max_real_root(from_roots(*roots)), places=9)

    def test_matches_spectral_radius(self):
        g = complete_bipartite(4, 9)
        q = quotient(g, [range(4), range(4, 13)])
        self.assertAlmostEqual(spectral_radius(g).radius, max_real_root(char_poly(q)), places=10)

    @pytest.mark.slow
    def test_matches_spectral_radius_on_seven_vertices(self):
        count = 0
        for g in iter_graphs(7):
            root = max_real_root(char_poly(g.adjacency_matrix(dtype=int).tolist()))
            self.assertAlmostEqual(spectral_radius(g).radius, root, delta=1e-9)
            count += 1
        self.assertEqual(1044, count)


class CompareMaxRootsTest(unittest.TestCase):

    def test_smaller_root(self):
        result = compare_max_roots(X * X - 2, X * X - 3)
        self.assertEqual(-1, result.sign)
        self.assertTrue(2 < result.separator ** 2 < 3)
        self.assertEqual(1, result.p_sign)
        self.assertEqual(-1, result.q_sign)

    def test_larger_root(self):
        result = compare_max_roots(from_roots(0, 5), X * X - 24)
        self.assertEqual(1, result.sign)
        self.assertTrue(24 < result.separator ** 2 < 25)

    def test_equal_roots(self):
        result = compare_max_roots(X * X - 2, (X * X - 2) * (X + 5))
        self.assertEqual(0, result.sign)
        self.assertIsNone(result.separator)

    def test_close_roots(self):
        eps = Fraction(1, 10 ** 12)
        result = compare_max_roots(from_roots(1), from_roots(1 + eps))
        self.assertEqual(-1, result.sign)


class SecondRootTest(unittest.TestCase):

    def test_rational_bound(self):
        self.assertTrue(check_second_root_below(from_roots(1, 3), 4))
        self.assertFalse(check_second_root_below(from_roots(Fraction(5, 2), 3), 4))

    def test_irrational_bound(self):
        self.assertTrue(check_second_root_below(from_roots(1, 3), 2))
        self.assertFalse(check_second_root_below(from_roots(-5, -4), 2))

    def test_repeated_largest_root(self):
        self.assertFalse(check_second_root_below(from_roots(1, 3, 3), 4))

    def test_root_on_bound(self):
        self.assertTrue(check_second_root_below(from_roots(0, 2), 4))
