# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import os
import shutil
import tempfile
import unittest

import numpy as np

from tdnls.criticality import Nonlinearity
from tdnls.oscillator import OscillatorModel
from tdnls.solver import InitialData, RunRecord, SimConfig
from tdnls.spectral import Grid, WaveState

#: Gates acceptance scale runs.
long_test = unittest.skipUnless(os.environ.get('TDNLS_LONG_TESTS'),
                                'set TDNLS_LONG_TESTS to run')


class CallLogger(object):

    def __init__(self, func):
        self.func = func
        self.was_called = False
        self.calls = []

    def __call__(self, *args, **kwargs):
        self.was_called = True
        self.calls.append((args, kwargs))
        return self.func(*args, **kwargs)


def track_call(func):
    return CallLogger(func)


class TempDirMixIn(object):

    def setUp(self):
        super(TempDirMixIn, self).setUp()
        self.tmpdir = tempfile.mkdtemp(prefix='tdnls-')

    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)
        super(TempDirMixIn, self).tearDown()

    def path(self, *parts):
        return os.path.join(self.tmpdir, *parts)


def gaussian(grid, t=0.0):
    """Unit Gaussian ``exp(-|x|^2 / 2)`` as an original frame state."""
    return WaveState(grid, np.exp(-grid.radius_sq() / 2.0), t)


def free_gaussian(grid, s):
    """Free evolution of the unit Gaussian after time `s`."""
    z = 1.0 + 1j * s
    values = z ** (-grid.n / 2.0) * np.exp(-grid.radius_sq() / (2.0 * z))
    return WaveState(grid, values, s)


def coherent_state(grid, t):
    """Ground state of ``-Laplacian / 2 + |x|^2 / 2`` at time `t`."""
    values = np.pi ** (-grid.n / 4.0) * np.exp(-grid.radius_sq() / 2.0) \
        * np.exp(-0.5j * grid.n * t)
    return WaveState(grid, values, t)


def small_config(**kwargs):
    """Cheap one dimensional configuration for unit tests."""
    params = dict(grid=Grid(1, 128, 16.0), model=OscillatorModel(),
                  nl=Nonlinearity(3.0), initial=InitialData(),
                  t0=1.0, t_end=2.0, dt=0.02, record_every=5)
    params.update(kwargs)
    return SimConfig(**params)


def synthetic_record(times, config=None, **series):
    """Run record holding given series, e.g. ``l2=[...]``."""
    record = RunRecord(config or small_config())
    record.times = list(times)
    names = {'l2': 'l2_norms', 'linf': 'linf_norms',
             'ledger_residual': 'ledger_residuals', 'x_norm': 'x_norms',
             'gradient': 'gradient_norms', 'weighted': 'weighted_norms'}
    for name, values in series.items():
        setattr(record, names.get(name, name), list(values))
    return record
