# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Split-step time stepping of the dissipative equation.

Two frames are available. The original frame steps
``i u_t = -Laplacian u / 2 + sigma(t) |x|^2 u / 2 + lambda |u|^(p-1) u``
with a Strang split linear part. The lens frame steps the reduced equation
``i v_t + Laplacian v / (2 y1^2) = lambda |y1|^(-n (p-1) / 2) |v|^(p-1) v``
whose linear part is solved exactly by the ``Y`` clock. In both frames the
nonlinear substep is the exact pointwise solution.
"""

import logging
import math
import warnings

import numpy as np

from .constants import (
    ORIGINAL, LENS, TO_LENS, TO_ORIGINAL, EPSILON1, LEDGER_TOL, DT_MIN,
    LINF_CEILING, BOUNDARY_RATIO, ODE_TOL, WRONSKIAN_TOL, DELTA_MIN,
)
from .exceptions import (
    BlowupDetected, ConfigError, DomainError, GridMismatch, NonConvergence,
    SingularY1,
)
from .oscillator import build_derived, solve_fundamental
from .records import CrossValidation
from .spectral import (
    WaveState, ProfileState, apply_multiplier, idft, interpolate,
    j_power_norm, lens_transform, sobolev_norm, sobolev_seminorm,
)

log = logging.getLogger(__name__)

__all__ = ['InitialData', 'SimConfig', 'MassLedger', 'RunRecord',
           'make_initial_state', 'nonlinear_substep',
           'linear_substep_original', 'linear_substep_lens', 'evolve',
           'cross_validate']

STRANG = 'strang'
LIE = 'lie'

#: Slack when matching step ends with record times.
TIME_SLACK = 1e-12


class InitialData(object):
    """Recipe for the initial field ``u0``.

    ``gaussian`` is ``exp(-|x - center|^2 / (2 width^2) + i chirp |x|^2 / 2)``;
    ``fourier_bump`` is a smooth compactly supported profile of radius
    `bump_radius` around `bump_center` in frequency; ``file`` loads a field
    snapshot; ``random`` superposes `modes` seeded plane waves under a
    Gaussian envelope. With `normalize` the shape is scaled to unit L2 norm
    before it is multiplied by `amplitude`.
    """

    KINDS = ('gaussian', 'fourier_bump', 'file', 'random')

    def __init__(self, kind='gaussian', width=1.0, amplitude=1.0, center=None,
                 chirp=0.0, normalize=True, bump_radius=2.0, bump_center=None,
                 path=None, modes=8):
        if kind not in self.KINDS:
            raise ConfigError('Unknown initial data kind %r' % kind)
        if kind == 'file' and not path:
            raise ConfigError('Initial data from file needs a path')
        self.kind = kind
        self.width = float(width)
        self.amplitude = float(amplitude)
        self.center = list(center or [])
        self.chirp = float(chirp)
        self.normalize = bool(normalize)
        self.bump_radius = float(bump_radius)
        self.bump_center = list(bump_center or [])
        self.path = path
        self.modes = int(modes)

    def __repr__(self):
        return 'InitialData(kind=%r, amplitude=%r)' % (self.kind,
                                                       self.amplitude)

    def replace(self, **kwargs):
        params = dict(self.__dict__)
        params.update(kwargs)
        return self.__class__(**params)

    @staticmethod
    def _vector(values, n):
        values = list(values)
        if not values:
            return [0.0] * n
        if len(values) == 1:
            return values * n
        if len(values) != n:
            raise ConfigError('Expected %d components, got %r' % (n, values))
        return values

    def _gaussian(self, grid):
        center = self._vector(self.center, grid.n)
        dist = sum((grid.coordinates(k) - center[k]) ** 2
                   for k in range(grid.n))
        return np.exp(-dist / (2.0 * self.width ** 2)
                      + 0.5j * self.chirp * grid.radius_sq())

    def _fourier_bump(self, grid):
        center = self._vector(self.bump_center, grid.n)
        dist = sum((grid.frequencies(k) - center[k]) ** 2
                   for k in range(grid.n)) / self.bump_radius ** 2
        dist = np.broadcast_to(dist, grid.shape)
        inside = dist < 1.0
        spectrum = np.zeros(grid.shape, dtype=complex)
        spectrum[inside] = np.exp(1.0 - 1.0 / (1.0 - dist[inside]))
        return idft(ProfileState(grid, spectrum)).values

    def _file(self, grid):
        from .codec import load_field
        state = load_field(self.path)
        if state.frame != ORIGINAL:
            raise ConfigError('Initial field %r is not in the original frame'
                              % self.path)
        if state.grid != grid:
            raise GridMismatch('Initial field grid %r does not match %r'
                               % (state.grid, grid))
        return state.values

    def _random(self, grid, seed):
        rng = np.random.default_rng(seed)
        envelope = np.exp(-grid.radius_sq() / (2.0 * self.width ** 2))
        total = np.zeros(grid.shape, dtype=complex)
        for _ in range(self.modes):
            wave = rng.uniform(-2.0, 2.0, size=grid.n)
            weight = complex(*rng.normal(size=2))
            phase = sum(wave[k] * grid.coordinates(k) for k in range(grid.n))
            total = total + weight * np.exp(1j * phase)
        return envelope * total

    def build(self, grid, t=0.0, seed=0):
        """Samples the initial field on `grid` at time `t`.

        :rtype: :class:`~tdnls.spectral.WaveState`
        """
        if self.kind == 'gaussian':
            values = self._gaussian(grid)
        elif self.kind == 'fourier_bump':
            values = self._fourier_bump(grid)
        elif self.kind == 'file':
            values = self._file(grid)
        else:
            values = self._random(grid, seed)
        state = WaveState(grid, values, t, ORIGINAL)
        if self.normalize:
            norm = state.l2_norm()
            if norm == 0:
                raise ConfigError('Initial data vanishes on the grid')
            values = values / norm
        return WaveState(grid, self.amplitude * values, t, ORIGINAL)


def make_initial_state(initial, grid, t=0.0, seed=0):
    """Shortcut for :meth:`InitialData.build`."""
    return initial.build(grid, t, seed)


class SimConfig(object):
    """Everything a single run needs.

    :param grid: Periodic grid of the original frame.
    :type grid: :class:`~tdnls.spectral.Grid`

    :param model: sigma model.
    :type model: :class:`~tdnls.oscillator.OscillatorModel`

    :param nl: Nonlinearity.
    :type nl: :class:`~tdnls.criticality.Nonlinearity`

    :param initial: Initial data recipe.
    :type initial: :class:`InitialData`

    :raises: :exc:`~tdnls.exceptions.ConfigError` on inconsistent values.
    """

    def __init__(self, grid, model, nl, initial=None, t0=1.0, t_end=50.0,
                 dt=0.01, frame=LENS, splitting=STRANG, record_every=10,
                 snapshot_every=0, s=1.0, epsilon1=EPSILON1,
                 ledger_tol=LEDGER_TOL, adaptive=True, dt_min=DT_MIN,
                 linf_ceiling=LINF_CEILING, boundary_ratio=BOUNDARY_RATIO,
                 seed=0, horizon=None, dealias=False, ode_tol=ODE_TOL,
                 wronskian_tol=WRONSKIAN_TOL, delta_min=DELTA_MIN):
        if not dt > 0:
            raise ConfigError('Time step should be positive, got %r' % dt)
        if not t_end > t0:
            raise ConfigError('t_end %r should exceed t0 %r' % (t_end, t0))
        if t0 < 0:
            raise ConfigError('t0 should not be negative, got %r' % t0)
        if frame not in (ORIGINAL, LENS):
            raise ConfigError('Unknown frame %r' % frame)
        if splitting not in (STRANG, LIE):
            raise ConfigError('Unknown splitting %r' % splitting)
        if int(record_every) < 1:
            raise ConfigError('record_every should be positive')
        if horizon is not None and horizon < t_end:
            raise ConfigError('Horizon %r ends before t_end %r'
                              % (horizon, t_end))
        if frame == LENS and t0 < model.T0:
            raise ConfigError('Lens frame runs start at t0 >= T0 = %r, got %r'
                              % (model.T0, t0))
        self.grid = grid
        self.model = model
        self.nl = nl
        self.initial = initial or InitialData()
        self.t0 = float(t0)
        self.t_end = float(t_end)
        self.dt = float(dt)
        self.frame = frame
        self.splitting = splitting
        self.record_every = int(record_every)
        self.snapshot_every = int(snapshot_every)
        self.s = float(s)
        self.epsilon1 = float(epsilon1)
        self.ledger_tol = float(ledger_tol)
        self.adaptive = bool(adaptive)
        self.dt_min = float(dt_min)
        self.linf_ceiling = float(linf_ceiling)
        self.boundary_ratio = float(boundary_ratio)
        self.seed = int(seed)
        self.horizon = None if horizon is None else float(horizon)
        self.dealias = bool(dealias)
        self.ode_tol = float(ode_tol)
        self.wronskian_tol = float(wronskian_tol)
        self.delta_min = float(delta_min)
        self._pair = None
        self._derived = None

    _PARAMS = ('grid', 'model', 'nl', 'initial', 't0', 't_end', 'dt', 'frame',
               'splitting', 'record_every', 'snapshot_every', 's', 'epsilon1',
               'ledger_tol', 'adaptive', 'dt_min', 'linf_ceiling',
               'boundary_ratio', 'seed', 'horizon', 'dealias', 'ode_tol',
               'wronskian_tol', 'delta_min')

    def __repr__(self):
        return ('SimConfig(n=%d, p=%r, model=%r, frame=%r, t=[%r, %r], dt=%r)'
                % (self.grid.n, self.nl.p, self.model.kind, self.frame,
                   self.t0, self.t_end, self.dt))

    def __getstate__(self):
        state = dict(self.__dict__)
        state['_pair'] = state['_derived'] = None
        return state

    def replace(self, **kwargs):
        """Returns a copy with some parameters replaced.

        The fundamental pair is shared when the model and horizon stay.
        """
        params = dict((key, getattr(self, key)) for key in self._PARAMS)
        params.update(kwargs)
        other = self.__class__(**params)
        if other.model is self.model and other.span == self.span:
            other._pair = self._pair
            if other.nl.p == self.nl.p and other.grid.n == self.grid.n:
                other._derived = self._derived
        return other

    @property
    def span(self):
        """Horizon of the fundamental pair."""
        return self.t_end if self.horizon is None else self.horizon

    def fundamental(self):
        """Fundamental pair on ``[0, span]``, solved once."""
        if self._pair is None:
            self._pair = solve_fundamental(self.model, self.span,
                                           self.ode_tol,
                                           wronskian_tol=self.wronskian_tol)
        return self._pair

    def derived(self):
        """``Y`` and ``Y2`` clocks on ``[T0, span]``, built once."""
        if self._derived is None:
            self._derived = build_derived(self.fundamental(), self.grid.n,
                                          self.nl.p, self.model.T0, self.span)
        return self._derived

    def initial_state(self):
        return make_initial_state(self.initial, self.grid, self.t0, self.seed)


def nonlinear_substep(state, nl, dt, coeff=1.0):
    """Solves ``i u_t = coeff lambda |u|^(p-1) u`` exactly over `dt`.

    The modulus follows ``rho^(1-p) = rho0^(1-p) + (p-1) |Im lambda| coeff dt``
    and the phase turns by ``-Re lambda coeff \\int rho^(p-1)``, both in
    closed form. Zero amplitude points stay zero.
    """
    if dt < 0:
        raise ValueError('Negative substep %r' % dt)
    if dt == 0 or nl.is_linear:
        return state.copy()
    p, g = nl.p, nl.dissipation
    power = np.abs(state.values) ** (p - 1.0)
    if g > 0:
        growth = (p - 1.0) * g * coeff * dt * power
        factor = (1.0 + growth) ** (-1.0 / (p - 1.0))
        phase = -nl.lambda_re * np.log1p(growth) / ((p - 1.0) * g)
    else:
        factor = 1.0
        phase = -nl.lambda_re * coeff * power * dt
    return state.replace(values=state.values * factor * np.exp(1j * phase))


def linear_substep_original(state, model, t, dt):
    """Strang step of ``i u_t = -Laplacian u / 2 + sigma |x|^2 u / 2``.

    The potential is frozen at ``t + dt / 2`` and split in two halves around
    the kinetic multiplier ``exp(-i dt |xi|^2 / 2)``.
    """
    if dt == 0:
        return state.copy()
    grid = state.grid
    sigma = float(model.sigma(t + 0.5 * dt))
    potential = np.exp(-0.25j * sigma * dt * grid.radius_sq())
    kinetic = np.exp(-0.5j * dt * grid.frequency_sq())
    values = potential * apply_multiplier(potential * state.values, kinetic)
    return state.replace(values=values, t=t + dt)


def linear_substep_lens(state, derived, t, dt):
    """Exact step of ``i v_t + Laplacian v / (2 y1^2) = 0``.

    Applies ``exp(i (Y(t + dt) - Y(t)) Laplacian)`` and refreshes the
    ``y1, dy1`` carried by the state.
    """
    if dt == 0:
        return state.copy()
    y1, dy1, _, _ = derived.pair(t + dt)
    jump = float(derived.Y(t + dt) - derived.Y(t))
    values = apply_multiplier(state.values,
                              np.exp(-1j * jump * state.grid.frequency_sq()))
    return state.replace(values=values, t=t + dt, y1=float(y1),
                         dy1=float(dy1))


class MassLedger(object):
    """Running check of ``||u||^2 + 2 |Im lambda| \\int ||u||_{p+1}^{p+1}``.

    The dissipation integral is accumulated with the trapezoid rule from
    the integrand at both ends of every accepted step.
    """

    def __init__(self, initial_mass_sq, dissipation):
        self.initial_mass_sq = float(initial_mass_sq)
        self.current_mass_sq = float(initial_mass_sq)
        self.dissipation = float(dissipation)
        self.dissipated = 0.0

    def __repr__(self):
        return 'MassLedger(initial=%r, current=%r, dissipated=%r)' % (
            self.initial_mass_sq, self.current_mass_sq, self.dissipated)

    def _increment(self, before, after, h):
        return self.dissipation * 0.5 * h * (before + after)

    def step_residual(self, mass_before, mass_after, before, after, h):
        """Relative ledger mismatch of a single candidate step."""
        if self.initial_mass_sq == 0:
            return 0.0
        change = mass_after - mass_before + 2.0 * self._increment(before,
                                                                  after, h)
        return abs(change) / self.initial_mass_sq

    def advance(self, mass_after, before, after, h):
        self.dissipated += self._increment(before, after, h)
        self.current_mass_sq = float(mass_after)

    @property
    def residual(self):
        if self.initial_mass_sq == 0:
            return 0.0
        return abs(self.current_mass_sq + 2.0 * self.dissipated
                   - self.initial_mass_sq) / self.initial_mass_sq


class RunRecord(object):
    """Diagnostics recorded by :func:`evolve`.

    Norms are those of the original frame field ``u``; ``x_norms`` and
    ``weighted_norms`` are measured on the lens frame field ``v``.
    Snapshots are kept in the frame the run was stepped in.
    """

    #: Columns of the CSV series.
    COLUMNS = ('t', 'l2', 'linf', 'ledger_residual', 'hs_half', 'x_norm')

    def __init__(self, config):
        self.config = config
        self.times = []
        self.l2_norms = []
        self.linf_norms = []
        self.ledger_residuals = []
        self.hs_half = []
        self.x_norms = []
        self.gradient_norms = []
        self.weighted_norms = []
        self.dissipated = []
        self.snapshots = []
        self.initial_state = None
        self.final_state = None
        self.steps = 0
        self.halvings = 0

    def __repr__(self):
        return 'RunRecord(%r, records=%d)' % (self.config, len(self.times))

    def __len__(self):
        return len(self.times)

    def array(self, name):
        """Recorded series as a numpy array; ``t`` selects the times."""
        attr = {'t': 'times', 'l2': 'l2_norms', 'linf': 'linf_norms',
                'ledger_residual': 'ledger_residuals', 'x_norm': 'x_norms',
                'gradient': 'gradient_norms', 'weighted': 'weighted_norms'}
        return np.asarray(getattr(self, attr.get(name, name)), dtype=float)

    def rows(self):
        return list(zip(self.times, self.l2_norms, self.linf_norms,
                        self.ledger_residuals, self.hs_half, self.x_norms))

    @property
    def terminal_residual(self):
        return self.ledger_residuals[-1] if self.ledger_residuals else None

    def summary(self):
        """Plain dictionary of the headline numbers."""
        return {
            'frame': self.config.frame,
            'records': len(self.times),
            'steps': self.steps,
            'halvings': self.halvings,
            't_end': self.times[-1] if self.times else None,
            'l2_initial': self.l2_norms[0] if self.l2_norms else None,
            'l2_terminal': self.l2_norms[-1] if self.l2_norms else None,
            'linf_terminal': self.linf_norms[-1] if self.linf_norms else None,
            'ledger_residual': self.terminal_residual,
            'ledger_residual_max': (max(self.ledger_residuals)
                                    if self.ledger_residuals else None),
            'dissipated': self.dissipated[-1] if self.dissipated else None,
        }


class _Stepper(object):

    def __init__(self, config, pair, derived):
        self.config = config
        self.pair = pair
        self.derived = derived
        self.nl = config.nl
        self.weight_exponent = config.grid.n * (config.nl.p - 1.0) / 2.0
        self.mask = config.grid.dealias_mask() if config.dealias else None

    def coefficient(self, t):
        if self.config.frame == ORIGINAL:
            return 1.0
        return abs(float(self.pair.y1(t))) ** (-self.weight_exponent)

    def integrand(self, state):
        if self.nl.is_linear:
            return 0.0
        return self.coefficient(state.t) * state.lp_norm_p(self.nl.p + 1.0)

    def _linear(self, state, t, h):
        if self.config.frame == LENS:
            return linear_substep_lens(state, self.derived, t, h)
        return linear_substep_original(state, self.config.model, t, h)

    def _nonlinear(self, state, t, h):
        new = nonlinear_substep(state, self.nl, h, self.coefficient(t))
        if self.mask is not None:
            new = new.replace(values=apply_multiplier(new.values, self.mask))
        return new

    def __call__(self, state, t, h):
        if self.config.splitting == STRANG:
            half = self._linear(state, t, 0.5 * h)
            mid = self._nonlinear(half, t + 0.5 * h, h)
            return self._linear(mid, t + 0.5 * h, 0.5 * h)
        new = self._nonlinear(state, t + 0.5 * h, h)
        return self._linear(new, t, h)


def _lens_pair_state(state, pair, config):
    if config.frame == LENS:
        return lens_transform(state, direction=TO_ORIGINAL), state
    try:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            return state, lens_transform(state, pair, state.t)
    except SingularY1:
        return state, None


def _record(record, state, ledger, pair, config):
    u, v = _lens_pair_state(state, pair, config)
    record.times.append(state.t)
    record.l2_norms.append(u.l2_norm())
    record.linf_norms.append(u.linf_norm())
    record.ledger_residuals.append(ledger.residual)
    record.dissipated.append(ledger.dissipated)
    record.hs_half.append(sobolev_norm(u, 0.5 * config.s))
    record.gradient_norms.append(sobolev_seminorm(u, 1.0))
    if v is None:
        record.x_norms.append(float('nan'))
        record.weighted_norms.append(float('nan'))
        return
    y1, _, y2, _ = pair(state.t)
    Y = float(y2) / (2.0 * float(y1))
    bracket = math.sqrt(1.0 + Y * Y)
    n = config.grid.n
    x_norm = bracket ** (n / 2.0) * v.linf_norm() \
        + bracket ** (-config.epsilon1) * (sobolev_norm(v, config.s)
                                           + j_power_norm(v, Y, config.s))
    record.x_norms.append(x_norm)
    record.weighted_norms.append(j_power_norm(v, 2.0 * Y, 1.0))


def evolve(config, pair=None, initial=None):
    """Integrates one configuration over ``[t0, t_end]``.

    Diagnostics are recorded at ``t0 + k record_every dt`` and at ``t_end``.
    With `adaptive` set, a step whose ledger mismatch exceeds its share
    ``ledger_tol h / (t_end - t0)`` is retried with half the step.

    :param config: Run parameters.
    :type config: :class:`SimConfig`

    :param pair: Fundamental pair to use instead of solving one.
    :param initial: Original frame field at ``t0`` replacing the recipe.
    :type initial: :class:`~tdnls.spectral.WaveState`

    :rtype: :class:`RunRecord`

    :raises:
        * :exc:`~tdnls.exceptions.BlowupDetected` if the sup norm exceeds
          the ceiling.
        * :exc:`~tdnls.exceptions.NonConvergence` if the step falls below
          `dt_min`.
        * :exc:`~tdnls.exceptions.SingularY1` if the lens frame is singular.
    """
    if pair is not None:
        config._pair = pair
    pair = config.fundamental()
    derived = config.derived() if config.frame == LENS else None
    u0 = initial if initial is not None else config.initial_state()
    if u0.frame != ORIGINAL or u0.grid.n != config.grid.n:
        raise GridMismatch('Initial field %r does not fit the run' % u0)
    u0 = u0.replace(t=config.t0)
    state = lens_transform(u0, pair, config.t0, TO_LENS) \
        if config.frame == LENS else u0.copy()
    step = _Stepper(config, pair, derived)
    record = RunRecord(config)
    record.initial_state = u0
    ledger = MassLedger(state.lp_norm_p(2), config.nl.dissipation)
    log.info('Run %r started, mass %.6g', config, ledger.initial_mass_sq)
    span = config.t_end - config.t0
    record_dt = config.record_every * config.dt
    snapshot_every = config.snapshot_every
    warned = False
    t, k = config.t0, 1
    _record(record, state, ledger, pair, config)
    if snapshot_every:
        record.snapshots.append(state.copy())
    while t < config.t_end - TIME_SLACK * max(1.0, config.t_end):
        target = min(config.t0 + k * record_dt, config.t_end)
        h = min(config.dt, target - t)
        mass_before = ledger.current_mass_sq
        before = step.integrand(state)
        while True:
            new = step(state, t, h)
            mass_after = new.lp_norm_p(2)
            after = step.integrand(new)
            mismatch = ledger.step_residual(mass_before, mass_after, before,
                                            after, h)
            if not config.adaptive or mismatch <= config.ledger_tol * h / span:
                break
            if 0.5 * h < config.dt_min:
                raise NonConvergence('Step %g at t=%g would fall below'
                                     ' dt_min %g' % (h, t, config.dt_min))
            h *= 0.5
            record.halvings += 1
            log.debug('Ledger mismatch %.3g at t=%g, halving to %g',
                      mismatch, t, h)
        ledger.advance(mass_after, before, after, h)
        t = target if abs(target - (t + h)) <= TIME_SLACK * max(1.0, target) \
            else t + h
        state = new.replace(t=t)
        record.steps += 1
        peak = state.linf_norm()
        if not peak <= config.linf_ceiling:
            raise BlowupDetected('Sup norm %g exceeds %g at t=%g'
                                 % (peak, config.linf_ceiling, t))
        if t != target:
            continue
        k += 1
        _record(record, state, ledger, pair, config)
        if snapshot_every and (len(record.times) - 1) % snapshot_every == 0:
            record.snapshots.append(state.copy())
        if not warned and state.boundary_ratio() > config.boundary_ratio:
            log.warning('Boundary amplitude ratio %.3g exceeds %.3g at t=%g;'
                        ' the box may be too small', state.boundary_ratio(),
                        config.boundary_ratio, t)
            warned = True
    if snapshot_every and record.snapshots[-1].t != state.t:
        record.snapshots.append(state.copy())
    record.final_state = state
    log.info('Run finished at t=%g after %d steps (%d halvings), ledger'
             ' residual %.3g', t, record.steps, record.halvings,
             ledger.residual)
    return record


def _discrepancy(reference, other, scale):
    diff = reference.replace(values=reference.values - other.values)
    return diff.l2_norm() / scale[0], diff.linf_norm() / scale[1]


def cross_validate(config, pair=None):
    """Runs both frames from the same ``u0`` and compares them over time.

    Lens snapshots are mapped back to the original frame and interpolated
    onto the original grid. Discrepancies are relative to ``||u0||_2`` and
    ``||u0||_inf``.

    :rtype: :class:`~tdnls.records.CrossValidation`
    """
    if pair is not None:
        config._pair = pair
    u0 = config.initial_state()
    scale = (u0.l2_norm(), u0.linf_norm())
    if not scale[0] > 0:
        raise DomainError('Cross validation needs non-zero initial data')
    original = evolve(config.replace(frame=ORIGINAL, snapshot_every=1),
                      initial=u0)
    lens = evolve(config.replace(frame=LENS, snapshot_every=1), initial=u0)
    times, l2, linf = [], [], []
    for left, right in zip(original.snapshots, lens.snapshots):
        if abs(left.t - right.t) > TIME_SLACK * max(1.0, left.t):
            raise GridMismatch('Snapshot times %g and %g differ'
                               % (left.t, right.t))
        mapped = lens_transform(right, direction=TO_ORIGINAL)
        mapped = interpolate(mapped, left.grid)
        a, b = _discrepancy(left, mapped, scale)
        times.append(left.t)
        l2.append(a)
        linf.append(b)
    log.info('Cross validation terminal discrepancy L2 %.3g, Linf %.3g',
             l2[-1], linf[-1])
    return CrossValidation(times=times, l2_discrepancy=l2,
                           linf_discrepancy=linf, terminal_l2=l2[-1],
                           terminal_linf=linf[-1])
