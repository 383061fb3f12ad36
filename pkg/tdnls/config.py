# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Experiment files.

An experiment file is an INI document with the sections ``[grid]``,
``[oscillator]``, ``[nonlinearity]``, ``[initial]``, ``[run]``, ``[sweep]``
and ``[fit]``; their keys are listed in :mod:`tdnls.records`. Every section
is optional and missing keys take their defaults::

    [oscillator]
    kind = inverse_square_attractive
    sigma0 = 0.1875

    [nonlinearity]
    p = 2.5
    lambda_im = -1

    [sweep]
    amplitudes = 0.5, 1, 2
"""

import configparser
import csv
import logging
import os

from .criticality import Nonlinearity
from .constants import TABULATED
from .exceptions import BaseTDNLSError, ConfigError
from .harness import ExperimentSpec
from .oscillator import OscillatorModel
from .records import (
    GridSection, OscillatorSection, NonlinearitySection, InitialSection,
    RunSection, SweepSection, FitSection,
)
from .solver import InitialData, SimConfig
from .spectral import Grid

log = logging.getLogger(__name__)

__all__ = ['SECTIONS', 'load_config', 'parse_config', 'read_table',
           'build_grid', 'build_model', 'build_nl', 'build_initial',
           'build_sim_config']

SECTIONS = {
    'grid': GridSection,
    'oscillator': OscillatorSection,
    'nonlinearity': NonlinearitySection,
    'initial': InitialSection,
    'run': RunSection,
    'sweep': SweepSection,
    'fit': FitSection,
}


def _section(parser, name):
    schema = SECTIONS[name]
    items = parser[name] if parser.has_section(name) else {}
    try:
        section = schema.from_section(items, name)
    except (TypeError, ValueError) as err:
        raise ConfigError('[%s] %s' % (name, err))
    return section


def read_table(path):
    """Reads a ``t, sigma`` CSV table.

    A header line is skipped when its first cell is not a number.

    :return: Tuple of knots and values.
    """
    knots, values = [], []
    try:
        with open(path, newline='') as f:
            for lineno, row in enumerate(csv.reader(f), 1):
                if not row or not ''.join(row).strip():
                    continue
                try:
                    t, sigma = float(row[0]), float(row[1])
                except (ValueError, IndexError):
                    if lineno == 1:
                        continue
                    raise ConfigError('%s:%d: expected "t, sigma", got %r'
                                      % (path, lineno, row))
                knots.append(t)
                values.append(sigma)
    except OSError as err:
        raise ConfigError('Cannot read sigma table %s: %s' % (path, err))
    return knots, values


def build_grid(section):
    try:
        return Grid(section.n, section.points, section.L)
    except ValueError as err:
        raise ConfigError('[grid] %s' % err)


def build_model(section, base_dir=None):
    """Oscillator model of an ``[oscillator]`` section.

    A relative `table` path is resolved against `base_dir`.
    """
    knots, values = section.knots, section.values
    if section.kind == TABULATED and section.table:
        path = section.table
        if base_dir and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        knots, values = read_table(path)
    try:
        return OscillatorModel(
            kind=section.kind, t_start=section.t_start, T0=section.T0,
            glue=section.glue, sigma0=section.sigma0, rho=section.rho,
            omega2=section.omega2, strength=section.strength,
            decay=section.decay, knots=knots, values=values)
    except BaseTDNLSError as err:
        raise ConfigError('[oscillator] %s' % err)


def build_nl(section):
    try:
        return Nonlinearity(section.p, section.lambda_re, section.lambda_im)
    except BaseTDNLSError as err:
        raise ConfigError('[nonlinearity] %s' % err)


def build_initial(section, base_dir=None):
    path = section.path
    if path and base_dir and not os.path.isabs(path):
        path = os.path.join(base_dir, path)
    if section.kind == 'file' and not path:
        raise ConfigError('[initial] kind = file needs a path')
    return InitialData(kind=section.kind, width=section.width,
                       amplitude=section.amplitude,
                       center=section.center or None, chirp=section.chirp,
                       normalize=section.normalize,
                       bump_radius=section.bump_radius,
                       bump_center=section.bump_center or None,
                       path=path, modes=section.modes)


def build_sim_config(sections, base_dir=None, seed=None):
    """:class:`~tdnls.solver.SimConfig` of parsed sections."""
    grid_section = sections['grid']
    oscillator = sections['oscillator']
    run = sections['run']
    return SimConfig(
        build_grid(grid_section), build_model(oscillator, base_dir),
        build_nl(sections['nonlinearity']),
        build_initial(sections['initial'], base_dir),
        t0=run.t0, t_end=run.t_end, dt=run.dt, frame=run.frame,
        splitting=run.splitting, record_every=run.record_every,
        snapshot_every=run.snapshot_every, s=run.s, epsilon1=run.epsilon1,
        ledger_tol=run.ledger_tol, adaptive=run.adaptive,
        dt_min=run.dt_min, linf_ceiling=run.linf_ceiling,
        boundary_ratio=run.boundary_ratio,
        seed=run.seed if seed is None else seed,
        horizon=oscillator.horizon, dealias=grid_section.dealias,
        ode_tol=oscillator.tol, wronskian_tol=oscillator.wronskian_tol,
        delta_min=oscillator.delta_min)


def parse_config(text, base_dir=None, seed=None, source='<string>'):
    """Builds an :class:`~tdnls.harness.ExperimentSpec` from INI text.

    :param seed: Overrides ``[run] seed``.

    :raises: :exc:`~tdnls.exceptions.ConfigError` naming the offending
             section on any unknown, missing or malformed entry.
    """
    parser = configparser.ConfigParser(interpolation=None)
    # keys such as L and T0 are case sensitive
    parser.optionxform = str
    try:
        parser.read_string(text, source)
    except configparser.Error as err:
        raise ConfigError('%s: %s' % (source, err))
    unknown = sorted(set(parser.sections()) - set(SECTIONS))
    if unknown:
        raise ConfigError('Unknown sections in %s: %s'
                          % (source, ', '.join(unknown)))
    if seed is not None and not 0 <= int(seed) < 2 ** 64:
        raise ConfigError('Seed should be an unsigned 64-bit integer')
    sections = dict((name, _section(parser, name)) for name in SECTIONS)
    base = build_sim_config(sections, base_dir, seed)
    sweep, fit = sections['sweep'], sections['fit']
    window = None
    if fit.window_start is not None or fit.window_end is not None:
        if fit.window_start is None or fit.window_end is None:
            raise ConfigError('[fit] window_start and window_end go together')
        if not fit.window_end > fit.window_start:
            raise ConfigError('[fit] window_end should exceed window_start')
        window = (fit.window_start, fit.window_end)
    spec = ExperimentSpec(
        base, amplitudes=sweep.amplitudes, powers=sweep.powers,
        models=sweep.models, refinement=sweep.refinement,
        refine_grid=sweep.refine_grid, workers=sweep.workers,
        comparisons=sweep.comparisons, interior_s=sweep.interior_s,
        fit_quantity=fit.quantity, fit_model=fit.model, window=window,
        tolerance=fit.tolerance)
    log.debug('Loaded %r from %s', spec, source)
    return spec


def load_config(path, seed=None):
    """Reads an experiment file.

    :param path: INI file path.
    :param seed: Overrides ``[run] seed``.

    :rtype: :class:`~tdnls.harness.ExperimentSpec`
    """
    try:
        with open(path) as f:
            text = f.read()
    except OSError as err:
        raise ConfigError('Cannot read %s: %s' % (path, err))
    return parse_config(text, os.path.dirname(os.path.abspath(path)), seed,
                        path)
