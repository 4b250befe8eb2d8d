import unittest

from unittest.mock import patch

from spexlab.utils.context import build_pbar_context, NullProgressBar


class BuildPbarContextTest(unittest.TestCase):

    def test_build_pbar_context_none(self):
        pbar = build_pbar_context(None)
        self.assertTrue(isinstance(pbar, NullProgressBar))
        with pbar as bar:
            bar.update(1)
            bar.set_postfix_str('x')

    def test_build_pbar_context_tqdm(self):
        with patch('tqdm.tqdm') as tqdm_mock:
            build_pbar_context('tqdm', dict(total=5))
            tqdm_mock.assert_called_with(total=5)
