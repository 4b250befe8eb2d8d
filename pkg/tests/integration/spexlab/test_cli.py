import json
import math
import os
import tempfile
import unittest
import warnings

from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from unittest import mock

from parameterized import parameterized

from spexlab.cli import EXIT_CAP, EXIT_INVALID, EXIT_OK, main, parse_int_list, parse_params


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()
        patcher = mock.patch.dict(os.environ, {'SPEXLAB_CONFIG': ''})
        patcher.start()
        self.addCleanup(patcher.stop)
        self.addCleanup(self.tmp_dir.cleanup)

    def run_main(self, argv):
        stdout, stderr = StringIO(), StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr), warnings.catch_warnings():
            warnings.simplefilter('ignore', RuntimeWarning)
            code = main(argv)
        return code, stdout.getvalue(), stderr.getvalue()

    def out_path(self, name='out.json'):
        return os.path.join(self.tmp_dir.name, name)

    def read_json(self, path):
        with open(path, encoding='utf-8') as f:
            return json.load(f)


class ArgumentParsingTest(unittest.TestCase):

    def test_int_list(self):
        self.assertEqual([5, 6, 7], parse_int_list('5..7'))
        self.assertEqual([10, 14, 18], parse_int_list('10,14,18'))
        self.assertEqual([], parse_int_list(''))

    def test_params(self):
        self.assertEqual({'k': 2, 'orders': (4, 2), 'variant': 'odd'},
                         parse_params(['k=2', 'orders=4,2', 'variant=odd']))
        with self.assertRaises(ValueError):
            parse_params(['k'])


class LambdaCommandTest(CliTestCase):

    def test_complete_bipartite(self):
        path = self.out_path()
        code, _, _ = self.run_main(['lambda', 'K3,7', '--out', path])
        self.assertEqual(EXIT_OK, code)

        data = self.read_json(path)
        self.assertEqual(10, data['n'])
        self.assertEqual(21, data['edges'])
        self.assertAlmostEqual(math.sqrt(21), data['lambda'], places=9)
        self.assertEqual(0.0, data['alpha'])

    def test_stdout(self):
        code, stdout, _ = self.run_main(['lambda', 'K2+(P8 u 2*P4)', '--alpha', '0.5'])
        self.assertEqual(EXIT_OK, code)
        self.assertEqual(18, json.loads(stdout)['n'])

    @parameterized.expand([('(K3',), ('P0',), ('P3 u',)])
    def test_invalid_expression(self, expression):
        code, _, stderr = self.run_main(['lambda', expression])
        self.assertEqual(EXIT_INVALID, code)
        self.assertTrue(stderr.startswith('spexlab:'))


class SearchCommandTest(CliTestCase):

    def test_ex(self):
        path = self.out_path()
        code, _, _ = self.run_main(['ex', '--n', '6', '--family', 'list:M4', '--no-timestamp',
                                    '--out', path])
        self.assertEqual(EXIT_OK, code)
        data = self.read_json(path)
        self.assertEqual(5, data['optimum'])
        self.assertNotIn('runtime_ms', data)

    def test_spex(self):
        path = self.out_path()
        code, _, _ = self.run_main(['spex', '--n', '6', '--family', 'list:K3', '--out', path])
        self.assertEqual(EXIT_OK, code)
        self.assertAlmostEqual(3.0, self.read_json(path)['optimum'], places=9)

    def test_ex_restricted(self):
        path = self.out_path()
        code, _, _ = self.run_main(['ex', '--n', '6', '--family', 'list:M4', '--restricted-k',
                                    '1', '--no-timestamp', '--out', path])
        self.assertEqual(EXIT_OK, code)
        self.assertEqual(5, self.read_json(path)['optimum'])

    def test_cap_exceeded(self):
        code, _, stderr = self.run_main(['ex', '--n', '14', '--family', 'list:K3'])
        self.assertEqual(EXIT_CAP, code)
        self.assertIn('exceeds cap', stderr)

    def test_invalid_family(self):
        code, _, _ = self.run_main(['ex', '--n', '5', '--family', 'bogus:1'])
        self.assertEqual(EXIT_INVALID, code)

    def test_invalid_config(self):
        config_path = self.out_path('spexlab.cfg')
        with open(config_path, 'w', encoding='utf-8') as f:
            f.write('workers = 0\n')
        code, _, _ = self.run_main(['ex', '--n', '5', '--family', 'list:M4',
                                    '--config', config_path])
        self.assertEqual(EXIT_INVALID, code)


class VerificationCommandTest(CliTestCase):

    def test_verify(self):
        path, csv_path = self.out_path(), self.out_path('case.csv')
        code, _, _ = self.run_main(['verify', '--case', 'matchings', '--n', '5..6', '--out', path,
                                    '--csv', csv_path])
        self.assertEqual(EXIT_OK, code)
        data = self.read_json(path)
        self.assertEqual(['matched', 'matched'], [r['verdict'] for r in data['records']])
        self.assertTrue(os.path.isfile(csv_path))

    def test_verify_unknown_case(self):
        code, _, _ = self.run_main(['verify', '--case', 'no-such-case', '--n', '5'])
        self.assertEqual(EXIT_INVALID, code)

    def test_trees(self):
        path = self.out_path()
        code, _, _ = self.run_main(['trees', '--m', '4,5', '--exhaustive', '--edge-counts', '4',
                                    '--out', path])
        self.assertEqual(EXIT_OK, code)
        data = self.read_json(path)
        self.assertEqual([16, 125], [s['samples'] for s in data['stats']])
        self.assertEqual(['0', '0'], [s['exact_fraction'] for s in data['stats']])
        self.assertTrue(data['edge_counts'][0]['matches'])

    def test_counterexample(self):
        path = self.out_path()
        code, _, _ = self.run_main(['counterexample', '--n', '10', '--ceiling', '10',
                                    '--out', path])
        self.assertEqual(EXIT_OK, code)
        data = self.read_json(path)
        self.assertEqual([], data['failures'])
        self.assertIn(data['summary'], ('none below ceiling 10', 'crossover at n=10'))

    def test_counterexample_invalid_order(self):
        code, _, _ = self.run_main(['counterexample', '--n', '12', '--ceiling', '10'])
        self.assertEqual(EXIT_INVALID, code)
