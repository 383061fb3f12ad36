# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import unittest

from tdnls.config import load_config, parse_config, read_table
from tdnls.constants import (
    INVERSE_SQUARE_ATTRACTIVE, LENS, ORIGINAL, TABULATED, ZERO,
)
from tdnls.exceptions import ConfigError
from tdnls.tests.utils import TempDirMixIn


class ParseConfigTestCase(unittest.TestCase):

    def test_empty_document_takes_defaults(self):
        spec = parse_config('')
        config = spec.base
        self.assertEqual(config.grid.n, 1)
        self.assertEqual(config.grid.points, 256)
        self.assertEqual(config.model.kind, ZERO)
        self.assertEqual(config.nl.p, 3.0)
        self.assertEqual(config.nl.lam, -1j)
        self.assertEqual(config.frame, LENS)
        self.assertEqual((config.t0, config.t_end, config.dt),
                         (1.0, 50.0, 0.01))
        self.assertEqual(spec.comparisons, ('ledger', 'fits'))
        self.assertIsNone(spec.window)

    def test_case_sensitive_keys(self):
        spec = parse_config('[grid]\nL = 12\n'
                            '[oscillator]\nkind = inverse_square_attractive\n'
                            'sigma0 = 0.1875\nT0 = 2\n'
                            '[run]\nt0 = 2\nt_end = 4\n')
        self.assertEqual(spec.base.grid.L, 12.0)
        self.assertEqual(spec.base.model.kind, INVERSE_SQUARE_ATTRACTIVE)
        self.assertEqual(spec.base.model.T0, 2.0)

    def test_unknown_key(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config('[grid]\npionts = 64\n')
        self.assertIn('[grid]', str(ctx.exception))

    def test_unknown_section(self):
        self.assertRaises(ConfigError, parse_config, '[gird]\npoints = 64\n')

    def test_malformed_values(self):
        self.assertRaises(ConfigError, parse_config, '[grid]\npoints = many\n')
        self.assertRaises(ConfigError, parse_config, '[run]\ndt = -1\n')
        self.assertRaises(ConfigError, parse_config,
                          '[nonlinearity]\nlambda_im = 1\n')
        self.assertRaises(ConfigError, parse_config, '[grid]\npoints = 100\n')
        self.assertRaises(ConfigError, parse_config, 'points = 64\n')

    def test_inconsistent_run(self):
        self.assertRaises(ConfigError, parse_config,
                          '[run]\nt0 = 5\nt_end = 2\n')
        self.assertRaises(ConfigError, parse_config,
                          '[run]\nt0 = 0.5\n')

    def test_seed(self):
        self.assertEqual(parse_config('[run]\nseed = 11\n').base.seed, 11)
        self.assertEqual(parse_config('[run]\nseed = 11\n', seed=5).base.seed,
                         5)
        self.assertRaises(ConfigError, parse_config, '', seed=2 ** 64)

    def test_sweep_lists(self):
        spec = parse_config('[run]\nt_end = 3\n'
                            '[sweep]\namplitudes = 0.5, 1\npowers = 2, 3\n'
                            'refinement = 2\ncomparisons = ledger\n')
        self.assertEqual(spec.amplitudes, [0.5, 1.0])
        self.assertEqual(spec.powers, [2.0, 3.0])
        self.assertEqual(spec.comparisons, ('ledger',))
        self.assertEqual(len(spec.points()), 8)

    def test_window(self):
        spec = parse_config('[fit]\nwindow_start = 10\nwindow_end = 40\n')
        self.assertEqual(spec.window, (10.0, 40.0))
        self.assertRaises(ConfigError, parse_config,
                          '[fit]\nwindow_start = 10\n')
        self.assertRaises(ConfigError, parse_config,
                          '[fit]\nwindow_start = 10\nwindow_end = 5\n')

    def test_inline_table(self):
        spec = parse_config('[oscillator]\nkind = tabulated\n'
                            'knots = 0, 100\nvalues = 0.5, 0.5\n'
                            '[run]\nframe = original\n')
        self.assertEqual(spec.base.model.kind, TABULATED)
        self.assertEqual(spec.base.frame, ORIGINAL)
        self.assertEqual(list(spec.base.model.table), [0.5, 0.5])


class FilesTestCase(TempDirMixIn, unittest.TestCase):

    def test_read_table_skips_header(self):
        with open(self.path('sigma.csv'), 'w') as f:
            f.write('t,sigma\n0,1.5\n\n10,0.25\n')
        self.assertEqual(read_table(self.path('sigma.csv')),
                         ([0.0, 10.0], [1.5, 0.25]))

    def test_read_table_rejects_garbage(self):
        with open(self.path('sigma.csv'), 'w') as f:
            f.write('0,1\nten,2\n')
        self.assertRaises(ConfigError, read_table, self.path('sigma.csv'))

    def test_relative_table_path(self):
        with open(self.path('sigma.csv'), 'w') as f:
            f.write('0,0.1\n60,0.1\n')
        with open(self.path('lab.ini'), 'w') as f:
            f.write('[oscillator]\nkind = tabulated\ntable = sigma.csv\n')
        spec = load_config(self.path('lab.ini'))
        self.assertEqual(list(spec.base.model.knots), [0.0, 60.0])

    def test_missing_file(self):
        self.assertRaises(ConfigError, load_config, self.path('nope.ini'))
        self.assertRaises(ConfigError, parse_config,
                          '[oscillator]\nkind = tabulated\ntable = %s\n'
                          % self.path('nope.csv'))


if __name__ == '__main__':
    unittest.main()
