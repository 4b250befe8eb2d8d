import csv
import json
import os
import tempfile
import unittest

from datetime import timedelta

from spexlab.verification.catalog import CaseRecord, CaseResult
from spexlab.verification.reporting import (run_report,
                                            write_case_csv,
                                            write_case_json,
                                            write_markdown_report)
from spexlab.verification.trees import tree_edge_counts, TreeStats


def _case_result():
    records = [
        CaseRecord(4, 'C~', True, 'unmatched', lambdas={'0': {'predicted': 1.7, 'best': 2.0}}),
        CaseRecord(5, 'D~{', True, 'matched', lambdas={'0': {'predicted': 2.0, 'best': 2.0}},
                   notes=['tie at alpha=0: 2 witnesses']),
    ]
    return CaseResult('matchings', 'Matchings', 'list:M4', {'k': 1}, 1, records, 5)


class WriteCaseTest(unittest.TestCase):

    def test_csv(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, 'case.csv')
            write_case_csv(_case_result(), path)
            with open(path, newline='', encoding='utf-8') as f:
                rows = list(csv.reader(f))

        self.assertEqual(['n', 'lambda_pred', 'lambda_best', 'matched'], rows[0])
        self.assertEqual(['4', '1.7', '2.0', 'False'], rows[1])
        self.assertEqual(['5', '2.0', '2.0', 'True'], rows[2])

    def test_json(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, 'case.json')
            write_case_json(_case_result(), path)
            with open(path, encoding='utf-8') as f:
                data = json.load(f)

        self.assertEqual('matchings', data['name'])
        self.assertEqual(5, data['threshold'])
        self.assertEqual(['unmatched', 'matched'], [r['verdict'] for r in data['records']])


class WriteMarkdownReportTest(unittest.TestCase):

    def test_sections(self):
        stats = [TreeStats(4, 16, 0, 0.0, 0.0, 42, exhaustive=True)]
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, 'report.md')
            write_markdown_report(path, [_case_result()], tree_stats_list=stats,
                                  edge_counts=[tree_edge_counts(4)],
                                  runtime=timedelta(seconds=3))
            with open(path, encoding='utf-8') as f:
                text = f.read()

        self.assertTrue(text.startswith('# spexlab reproduction report'))
        self.assertIn('## Catalog cases', text)
        self.assertIn('### matchings', text)
        self.assertIn('tie at alpha=0: 2 witnesses', text)
        self.assertIn('## Trees', text)
        self.assertIn('| 4 | 16 | 0 | 0 | 0.0000 | True |', text)
        self.assertNotIn('## Counterexample', text)

    def test_empty_report(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, 'report.md')
            write_markdown_report(path)
            with open(path, encoding='utf-8') as f:
                text = f.read()
        self.assertNotIn('##', text)


class RunReportTest(unittest.TestCase):

    def test_run_report(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            output_dir = os.path.join(tmp_dir, 'out')
            paths = run_report(output_dir, cases={'matchings': (5, 6)}, counterexample_n=(10,),
                               ceiling=10, tree_orders=(4,), tree_samples=10,
                               edge_count_orders=(4,))
            names = [os.path.basename(path) for path in paths]
            self.assertEqual(['case-matchings.json', 'case-matchings.csv', 'counterexample.json',
                              'trees.json', 'report.md'], names)
            self.assertTrue(all(os.path.isfile(path) for path in paths))

            with open(os.path.join(output_dir, 'trees.json'), encoding='utf-8') as f:
                trees = json.load(f)
            self.assertEqual([4], [s['m'] for s in trees['stats']])
            self.assertTrue(trees['edge_counts'][0]['matches'])
