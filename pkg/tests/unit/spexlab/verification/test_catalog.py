import unittest
import warnings

from parameterized import parameterized

from spexlab.families.thresholds import is_saturated
from spexlab.graphs.named import complete_bipartite
from spexlab.verification.catalog import (case_names,
                                          CaseRecord,
                                          get_case,
                                          join_edge,
                                          join_empty,
                                          join_matching,
                                          observed_threshold,
                                          run_case,
                                          _chorded_cycle_order,
                                          _star_forest_predicted,
                                          _star_forest_shape)
from spexlab.verification.exceptions import UnknownCaseError


class CatalogTest(unittest.TestCase):

    def test_case_names(self):
        names = case_names()
        self.assertEqual(23, len(names))
        self.assertEqual(sorted(names), names)

    def test_unknown_case(self):
        with self.assertRaises(UnknownCaseError):
            get_case('no-such-case')
        with self.assertRaises(KeyError):
            run_case('no-such-case', [5])

    def test_join_builders(self):
        self.assertEqual(1 + 2 * 6, join_empty(2, 8).num_edges)
        self.assertEqual(1 + 2 * 6 + 1, join_edge(2, 8).num_edges)
        self.assertEqual(5 + 2, join_matching(1, 6).num_edges)

    def test_chorded_cycle_order(self):
        self.assertEqual(4, _chorded_cycle_order(1))
        self.assertEqual(5, _chorded_cycle_order(4))
        self.assertEqual(6, _chorded_cycle_order(6))

    def test_star_forest_shape(self):
        params = {'degrees': (3, 2)}
        self.assertTrue(_star_forest_shape(_star_forest_predicted(8, params), params))
        self.assertFalse(_star_forest_shape(complete_bipartite(2, 6), params))

    @parameterized.expand([
        ('matchings', 8),
        ('paths', 8),
        ('copies-of-P3', 8),
        ('long-cycles', 8),
        ('chorded-cycles', 8),
        ('erdos-sos', 8),
        ('disjoint-cycles', 8),
        ('even-cycles', 8),
        ('minors-Kk', 8),
        ('incident-chords', 8),
        ('intersecting-even-cycles', 10),
        ('subdivisions-Kk', 8),
        ('minors-Kk-minus-paths', 8),
    ])
    def test_predicted_graph_is_free(self, name, n):
        case = get_case(name)
        params = dict(case.defaults)
        spec = case.family(params)
        self.assertTrue(spec.is_free(case.predicted(n, params)))

    @parameterized.expand([
        ('subdivisions-Kk', 7),
        ('minors-Kk-minus-paths', 7),
    ])
    def test_predicted_graph_is_saturated(self, name, n):
        case = get_case(name)
        params = dict(case.defaults)
        self.assertTrue(is_saturated(case.predicted(n, params), case.family(params)))

    def test_intersecting_even_cycles(self):
        case = get_case('intersecting-even-cycles')
        params = dict(case.defaults)
        spec = case.family(params)
        self.assertEqual('list:C4,6', str(spec))
        self.assertEqual(3, case.k(params))
        self.assertEqual(9, case.min_order(params))
        self.assertEqual(9, spec.graphs[0].n)


class ObservedThresholdTest(unittest.TestCase):

    def test_threshold(self):
        records = [CaseRecord(4, '', True, 'unmatched'), CaseRecord(5, '', True, 'matched'),
                   CaseRecord(6, '', True, 'skipped'), CaseRecord(7, '', True, 'matched')]
        self.assertEqual(5, observed_threshold(records))

    def test_no_threshold(self):
        records = [CaseRecord(4, '', True, 'matched'), CaseRecord(5, '', True, 'unmatched')]
        self.assertIsNone(observed_threshold(records))
        self.assertIsNone(observed_threshold([]))


class RunCaseTest(unittest.TestCase):

    def test_matchings(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', RuntimeWarning)
            result = run_case('matchings', range(4, 7))
        self.assertEqual(['unmatched', 'matched', 'matched'],
                         [record.verdict for record in result.records])
        self.assertEqual(5, result.threshold)
        self.assertTrue(result.all_predictions_free)
        self.assertTrue(any(note.startswith('tie at alpha=0') for note in result.records[1].notes))
        self.assertEqual(1, result.k)
        self.assertEqual('list:M4', result.family)

    def test_orders_above_cap_are_skipped(self):
        result = run_case('matchings', [12], enumeration_cap=9)
        record, = result.records
        self.assertEqual('skipped', record.verdict)
        self.assertTrue(record.predicted_free)
        self.assertIsNone(result.threshold)

    def test_orders_below_minimum_are_dropped(self):
        result = run_case('matchings', [2, 3])
        self.assertEqual([], result.records)

    def test_params(self):
        result = run_case('linear-forests', [], params={'orders': (4, 2)})
        self.assertEqual([4, 2], result.to_dict()['params']['orders'])
        self.assertEqual(2, result.k)

    @parameterized.expand([
        ('linear-forests', {'orders': (3, 3)}),
        ('cycles-mod', {'ell': 2, 'r': 4}),
        ('small-trees', {'tree': 'P4'}),
        ('multiply-chorded', {'k': 1}),
        ('intersecting-even-cycles', {'ells': (2, 2)}),
        ('subdivisions-Kk', {'t': 2}),
        ('minors-Kk-minus-paths', {'paths': (3,)}),
        ('minors-Kk-minus-paths', {'paths': (4, 3)}),
    ])
    def test_invalid_params(self, name, params):
        with self.assertRaises(ValueError):
            run_case(name, [8], params=params)
