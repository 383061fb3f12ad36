# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Command line front end::

    tdnls simulate|classify|lens-check|profile|fit|sweep|korotyaev \\
          --config <file> [--out <dir>] [--seed <u64>] [-v] [-q]

Every command writes ``summary.json`` and ``report.txt`` under ``--out``
plus the series and field files it produces. Exit status is 0 on success,
1 on a library error and 2 on usage errors.
"""

import argparse
import logging
import os
import sys

import numpy as np

from .codec import dump_json, write_csv, write_oscillator_csv
from .config import load_config
from .criticality import classify, predicted_rates
from .exceptions import BaseTDNLSError, ConfigError
from .harness import (
    korotyaev_check, run_experiment, run_point, write_bundle,
)
from .solver import cross_validate
from .spectral import weighted_sobolev_norm
from .version import __version__


log = logging.getLogger(__name__)

__all__ = ['CommandDispatcher', 'make_parser', 'main']

COMMANDS = ('simulate', 'classify', 'lens-check', 'profile', 'fit', 'sweep',
            'korotyaev')

#: Samples per unit time of the oscillator series written by ``classify``.
OSCILLATOR_SAMPLES = 512


class CommandDispatcher(object):
    """Routes a command name to its ``on_*`` handler.

    Each handler takes the loaded :class:`~tdnls.harness.ExperimentSpec`
    and the output directory and returns the summary it wrote. Entries
    added to :attr:`dispatch` become commands of :func:`main`.
    """

    def __init__(self):
        self.dispatch = {
            'simulate': self.on_simulate,
            'classify': self.on_classify,
            'lens-check': self.on_lens_check,
            'profile': self.on_profile,
            'fit': self.on_fit,
            'sweep': self.on_sweep,
            'korotyaev': self.on_korotyaev,
        }

    def __call__(self, command, spec, out):
        try:
            handler = self.dispatch[command]
        except KeyError:
            raise ConfigError('Unknown command %r' % command)
        log.info('Running %s into %s', command, out)
        return handler(spec, out)

    def _single(self, spec, out, comparisons):
        result = run_point(spec.base, comparisons, label='run',
                           fit_quantity=spec.fit_quantity,
                           fit_model=spec.fit_model, window=spec.window,
                           tolerance=spec.tolerance)
        if 'error' in result:
            write_bundle({'results': [result]}, out)
            raise BaseTDNLSError('%s: %s' % (result['error'],
                                             result['message']))
        return write_bundle({'results': [result]}, out)

    def _write(self, summary, out, lines):
        os.makedirs(out, exist_ok=True)
        dump_json(summary, os.path.join(out, 'summary.json'))
        with open(os.path.join(out, 'report.txt'), 'w') as f:
            f.write('\n'.join(lines) + '\n')
        return summary

    def on_simulate(self, spec, out):
        """Single run with the mass ledger."""
        return self._single(spec, out, ('ledger',))

    def on_profile(self, spec, out):
        """Single run compared with the amplitude law."""
        return self._single(spec, out, ('ledger', 'profile'))

    def on_fit(self, spec, out):
        """Single run with decay fits against the predicted laws."""
        return self._single(spec, out, ('ledger', 'fits'))

    def on_sweep(self, spec, out):
        """Whole sweep of the experiment file."""
        return write_bundle(run_experiment(spec), out)

    def on_classify(self, spec, out):
        """Criticality of the oscillator model with its predicted laws."""
        config = spec.base
        pair = config.fundamental()
        n, p = config.grid.n, config.nl.p
        report = classify(pair, n, p, config.model.T0, config.span,
                          nl=config.nl, s=config.s)
        try:
            derived = config.derived()
        except BaseTDNLSError as err:
            log.warning('Predictions without oscillator clocks: %s', err)
            derived = None
        u0 = config.initial_state()
        predicted_rates(report, n, p, config.s, config.nl, derived,
                        norm0=weighted_sobolev_norm(u0, config.s),
                        l2_0=u0.l2_norm())
        series = os.path.join(out, 'series')
        os.makedirs(series, exist_ok=True)
        samples = max(2, int(OSCILLATOR_SAMPLES * config.span) + 1)
        write_oscillator_csv(os.path.join(series, 'oscillator.csv'), pair,
                             np.linspace(0.0, config.span, samples))
        lines = ['classification %s alpha %s c_plus %s p_critical %s' % (
            report.classification, report.alpha, report.c_plus,
            report.p_critical)]
        for prediction in report.predicted:
            lines.append('%-30s %-8s %s' % (
                prediction.theorem,
                'yes' if prediction.applicable else 'no',
                prediction.reason or prediction.formula))
        return self._write({'criticality': report}, out, lines)

    def on_lens_check(self, spec, out):
        """Runs both frames and compares them in the original frame."""
        result = cross_validate(spec.base)
        series = os.path.join(out, 'series')
        os.makedirs(series, exist_ok=True)
        write_csv(os.path.join(series, 'cross.csv'),
                  ('t', 'l2_discrepancy', 'linf_discrepancy'),
                  zip(result.times, result.l2_discrepancy,
                      result.linf_discrepancy))
        lines = ['terminal relative L2 %r, Linf %r' % (result.terminal_l2,
                                                       result.terminal_linf)]
        return self._write({'cross_validation': result}, out, lines)

    def on_korotyaev(self, spec, out):
        """Pointwise dispersive bound on linear runs."""
        config = spec.base
        report = korotyaev_check(config.model, config.fundamental(),
                                 config.grid, config.initial, config.t_end,
                                 config.dt, spec.interior_s,
                                 config.record_every)
        lines = ['starts %s sup ratios %s bounded %s' % (
            report.starts, report.sup_ratio, report.bounded)]
        if report.oracle_ratio is not None:
            lines.append('free oracle %r deviation %r' % (
                report.oracle_ratio, report.oracle_deviation))
        return self._write({'korotyaev': report}, out, lines)


def make_parser(commands=COMMANDS):
    parser = argparse.ArgumentParser(
        prog='tdnls',
        description='Decay experiments for dissipative NLS with a time'
                    ' dependent harmonic potential.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('command', choices=list(commands))
    parser.add_argument('--config', required=True,
                        help='experiment INI file')
    parser.add_argument('--out', default='./tdnls-out',
                        help='output directory (default: %(default)s)')
    parser.add_argument('--seed', type=_seed, default=None,
                        help='overrides [run] seed')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    parser.add_argument('-q', '--quiet', action='store_true')
    return parser


def _seed(value):
    try:
        seed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not an integer' % value)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError('seed should fit in 64 unsigned bits')
    return seed


def _level(verbose, quiet):
    if quiet:
        return logging.ERROR
    if verbose >= 2:
        return logging.DEBUG
    return logging.INFO if verbose else logging.WARNING


def main(argv=None, dispatcher=None):
    """Entry point of the ``tdnls`` script.

    :return: Exit status.
    """
    dispatcher = dispatcher or CommandDispatcher()
    parser = make_parser(dispatcher.dispatch)
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    logging.basicConfig(level=_level(args.verbose, args.quiet),
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        spec = load_config(args.config, seed=args.seed)
        dispatcher(args.command, spec, args.out)
    except BaseTDNLSError as err:
        log.error('%s failed: %s', args.command, err)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
