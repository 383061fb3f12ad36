# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Fundamental solutions of ``y'' + sigma(t) y = 0`` and derived clocks.

``y1`` starts from ``(1, 0)`` and ``y2`` from ``(0, 1)``. Their Wronskian
``y1 y2' - y1' y2`` stays equal to one, which is used throughout as the
consistency check of both the closed forms and the numeric integration.

From the pair the lens frame takes its clock ``Y = y2 / (2 y1)``, with
``Y' = 1 / (2 y1^2)``, and the dissipation acts on the clock
``Y2(t) = \\int_{T0}^t |y2|^(-n (p - 1) / 2)``.
"""

import logging
import math

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq
from scipy.special import roots_legendre

from .constants import (
    ZERO, CONSTANT, INVERSE_SQUARE_ATTRACTIVE, INVERSE_SQUARE_REPULSIVE,
    SUB_QUADRATIC, TABULATED, MODEL_KINDS, GLUE_MATCHED, GLUE_CONSTANT,
    CLOSED_FORM, NUMERIC_ODE, ODE_TOL, WRONSKIAN_TOL, QUAD_TOL,
    CONDITION_SAMPLES, MIN_FIT_SAMPLES, DELTA_MIN, C0_FLOOR, Y1_FLOOR,
)
from .exceptions import (
    DomainError, InsufficientRange, NonConvergence, SingularY1,
)
from .records import ConditionReport

log = logging.getLogger(__name__)

__all__ = ['OscillatorModel', 'FundamentalPair', 'OscillatorDerived',
           'solve_fundamental', 'check_conditions', 'build_derived']

#: Number of samples used to verify the Wronskian after solving.
WRONSKIAN_SAMPLES = 2001
#: Number of quadrature panels of the Y2 clock.
Y2_PANELS = 256
#: Gauss-Legendre nodes between a knot and an evaluation point.
Y2_NODES = 16
#: Number of samples used to look for zeros of y1.
Y1_SAMPLES = 4096


class OscillatorModel(object):
    """Time dependent coefficient ``sigma(t)`` of the harmonic potential.

    Kinds and their parameters:

    * ``zero``: sigma = 0.
    * ``constant``: sigma = `omega2`.
    * ``inverse_square_attractive``: sigma = `sigma0` / t^2 for t >= `t_start`,
      with `sigma0` in [0, 1/4).
    * ``inverse_square_repulsive``: sigma = -`rho` / t^2 for t >= `t_start`,
      with `rho` >= 0.
    * ``sub_quadratic``: sigma = `strength` (1 + t)^(-`decay`) with
      `decay` > 2, or any callable `sigma_fn` with t^2 sigma -> 0.
    * ``tabulated``: linear interpolation of `values` at `knots`.

    The inverse-square kinds are singular at zero and hold a constant on
    ``[0, t_start)``. With ``glue='matched'`` the constant makes ``y1``
    continue into the decaying power branch; with ``glue='constant'`` it is
    ``sigma(t_start)``.
    """

    def __init__(self, kind=ZERO, t_start=1.0, T0=1.0, glue=GLUE_MATCHED,
                 sigma0=0.0, rho=0.0, omega2=1.0, strength=1.0, decay=3.0,
                 knots=None, values=None, sigma_fn=None):
        if kind not in MODEL_KINDS:
            raise DomainError('Unknown oscillator model %r' % kind)
        if glue not in (GLUE_MATCHED, GLUE_CONSTANT):
            raise DomainError('Unknown glue %r' % glue)
        if t_start < 0 or T0 < 0:
            raise DomainError('t_start and T0 should be non-negative')
        self.kind = kind
        self.t_start = float(t_start)
        self.T0 = float(T0)
        self.glue = glue
        self.sigma0 = float(sigma0)
        self.rho = float(rho)
        self.omega2 = float(omega2)
        self.strength = float(strength)
        self.decay = float(decay)
        self.sigma_fn = sigma_fn
        self.knots = self.table = None
        if kind == INVERSE_SQUARE_ATTRACTIVE:
            if not 0 <= self.sigma0 < 0.25:
                raise DomainError('sigma0 should lie in [0, 1/4), got %r'
                                  % sigma0)
        elif kind == INVERSE_SQUARE_REPULSIVE:
            if self.rho < 0:
                raise DomainError('rho should be non-negative, got %r' % rho)
        elif kind == SUB_QUADRATIC:
            if sigma_fn is None and not self.decay > 2:
                raise DomainError('Sub-quadratic decay should exceed 2,'
                                  ' got %r' % decay)
        elif kind == TABULATED:
            knots = np.asarray(knots if knots is not None else [], float)
            table = np.asarray(values if values is not None else [], float)
            if knots.ndim != 1 or knots.size < 2 or knots.shape != table.shape:
                raise DomainError('Tabulated sigma needs matching knots and'
                                  ' values, at least two of each')
            if np.any(np.diff(knots) <= 0):
                raise DomainError('Tabulated knots should strictly increase')
            self.knots, self.table = knots, table
        if self.is_inverse_square and not self.t_start > 0:
            raise DomainError('Inverse-square models need t_start > 0')
        self.glue_sigma = self._glue_sigma()

    def __repr__(self):
        return 'OscillatorModel(kind=%r, t_start=%r, T0=%r)' % (
            self.kind, self.t_start, self.T0)

    @property
    def is_inverse_square(self):
        return self.kind in (INVERSE_SQUARE_ATTRACTIVE,
                             INVERSE_SQUARE_REPULSIVE)

    @property
    def tail_strength(self):
        """``c`` in ``sigma = c / t^2`` on the tail of inverse-square kinds."""
        if self.kind == INVERSE_SQUARE_ATTRACTIVE:
            return self.sigma0
        return -self.rho

    @property
    def exponents(self):
        """Exponents ``(b1, b2)``, ``b1 < b2``, of the power-law tail.

        ``None`` unless the kind has one. The attractive kind gives
        ``(mu, 1 - mu)`` and the repulsive kind ``(theta_-, 1 - theta_-)``.
        """
        if self.kind == ZERO:
            return (0.0, 1.0)
        if not self.is_inverse_square:
            return None
        root = math.sqrt(1.0 - 4.0 * self.tail_strength)
        return ((1.0 - root) / 2.0, (1.0 + root) / 2.0)

    @property
    def y2_exponent(self):
        """Asymptotic growth exponent of ``y2`` when it is known."""
        if self.kind == SUB_QUADRATIC:
            return 1.0
        exponents = self.exponents
        return exponents[1] if exponents else None

    @property
    def has_closed_form(self):
        return self.kind in (ZERO, CONSTANT) or self.is_inverse_square

    def _glue_sigma(self):
        if not self.is_inverse_square:
            return None
        c = self.tail_strength
        if self.glue == GLUE_CONSTANT:
            return c / self.t_start ** 2
        slope = abs(self.exponents[0])
        if slope == 0:
            return 0.0
        if self.kind == INVERSE_SQUARE_ATTRACTIVE:
            # cosh glue: x tanh(x) = mu with x = kappa t_start
            x = brentq(lambda x: x * math.tanh(x) - slope, 0.0, slope + 2.0)
            return -(x / self.t_start) ** 2
        # cos glue: x tan(x) = |theta_-| with x < pi / 2
        x = brentq(lambda x: x * math.tan(x) - slope, 0.0,
                   math.pi / 2.0 - 1e-12)
        return (x / self.t_start) ** 2

    def sigma(self, t):
        """Evaluates sigma at time(s) `t`."""
        t = np.asarray(t, dtype=float)
        if self.kind == ZERO:
            return np.zeros_like(t)
        if self.kind == CONSTANT:
            return np.full_like(t, self.omega2)
        if self.is_inverse_square:
            tail = self.tail_strength / np.maximum(t, self.t_start) ** 2
            return np.where(t < self.t_start, self.glue_sigma, tail)
        if self.kind == SUB_QUADRATIC:
            if self.sigma_fn is not None:
                return np.asarray(self.sigma_fn(t), dtype=float)
            return self.strength * (1.0 + t) ** (-self.decay)
        if np.any(t < self.knots[0]) or np.any(t > self.knots[-1]):
            raise DomainError('Tabulated sigma is defined on [%g, %g] only'
                              % (self.knots[0], self.knots[-1]))
        return np.interp(t, self.knots, self.table)

    def check_range(self, horizon):
        """Raises :exc:`DomainError` unless sigma is evaluable on [0, horizon]."""
        if not horizon > 0:
            raise DomainError('Horizon should be positive, got %r' % horizon)
        if self.kind == TABULATED and (self.knots[0] > 0
                                       or self.knots[-1] < horizon):
            raise DomainError('Tabulated sigma covers [%g, %g], need [0, %g]'
                              % (self.knots[0], self.knots[-1], horizon))
        if self.kind == SUB_QUADRATIC and self.sigma_fn is not None:
            probe = self.sigma(np.linspace(0.0, horizon, 64))
            if not np.all(np.isfinite(probe)):
                raise DomainError('sigma is not finite on [0, %g]' % horizon)

    def pieces(self, horizon):
        """Splits [0, horizon] into intervals with a smooth sigma each.

        :return: list of ``(start, end, sigma)`` where sigma is a float for
                 constant pieces and a callable otherwise.
        """
        if self.kind == ZERO:
            return [(0.0, horizon, 0.0)]
        if self.kind == CONSTANT:
            return [(0.0, horizon, self.omega2)]
        if self.is_inverse_square:
            c = self.tail_strength
            tail = lambda t: c / t ** 2
            if horizon <= self.t_start:
                return [(0.0, horizon, self.glue_sigma)]
            return [(0.0, self.t_start, self.glue_sigma),
                    (self.t_start, horizon, tail)]
        return [(0.0, horizon, lambda t: float(self.sigma(t)))]


def _constant_piece(c, tau, y, dy):
    """Propagates ``(y, y')`` by ``tau`` under a constant sigma ``c``."""
    if c > 0:
        w = math.sqrt(c)
        cos, sin = np.cos(w * tau), np.sin(w * tau)
        return y * cos + dy * sin / w, -y * w * sin + dy * cos
    if c < 0:
        k = math.sqrt(-c)
        cosh, sinh = np.cosh(k * tau), np.sinh(k * tau)
        return y * cosh + dy * sinh / k, y * k * sinh + dy * cosh
    return y + dy * tau, dy + 0.0 * tau


def _power_piece(exponents, start, t, y, dy):
    """Propagates ``(y, y')`` from `start` along ``a t^b1 + b t^b2``."""
    b1, b2 = exponents
    B = (dy * start - b1 * y) / (b2 - b1)
    A = y - B
    r = t / start
    p1, p2 = r ** b1, r ** b2
    return A * p1 + B * p2, (A * b1 * p1 + B * b2 * p2) / t


class _ClosedForm(object):

    def __init__(self, model):
        self.model = model

    def __call__(self, t):
        model = self.model
        t = np.asarray(t, dtype=float)
        if model.kind == ZERO:
            one = np.ones_like(t)
            return np.array([one, 0.0 * t, t.copy(), one])
        if model.kind == CONSTANT:
            y1, dy1 = _constant_piece(model.omega2, t, 1.0, 0.0)
            y2, dy2 = _constant_piece(model.omega2, t, 0.0, 1.0)
            return np.array([y1, dy1, y2, dy2])
        ts, c = model.t_start, model.glue_sigma
        inner = np.minimum(t, ts)
        y1, dy1 = _constant_piece(c, inner, 1.0, 0.0)
        y2, dy2 = _constant_piece(c, inner, 0.0, 1.0)
        a1, da1 = _constant_piece(c, ts, 1.0, 0.0)
        a2, da2 = _constant_piece(c, ts, 0.0, 1.0)
        outer = np.maximum(t, ts)
        t1, dt1 = _power_piece(model.exponents, ts, outer, a1, da1)
        t2, dt2 = _power_piece(model.exponents, ts, outer, a2, da2)
        tail = t >= ts
        return np.array([np.where(tail, t1, y1), np.where(tail, dt1, dy1),
                         np.where(tail, t2, y2), np.where(tail, dt2, dy2)])


class _NumericForm(object):

    def __init__(self, segments):
        self.segments = segments

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        flat = np.atleast_1d(t).ravel()
        out = np.empty((4, flat.size))
        done = np.zeros(flat.size, dtype=bool)
        for start, end, solution in self.segments:
            mask = ~done & (flat >= start) & (flat <= end)
            if mask.any():
                out[:, mask] = solution(flat[mask])
                done |= mask
        return out.reshape((4,) + t.shape)


class FundamentalPair(object):
    """Evaluable fundamental solutions ``y1, y2`` and their derivatives.

    Immutable after construction. Evaluation outside ``[0, horizon]``
    raises :exc:`~tdnls.exceptions.DomainError`.
    """

    def __init__(self, model, horizon, method, evaluator,
                 wronskian_tol=WRONSKIAN_TOL):
        self.model = model
        self.horizon = float(horizon)
        self.method = method
        self.wronskian_tol = wronskian_tol
        self._evaluator = evaluator

    def __repr__(self):
        return 'FundamentalPair(%r, horizon=%r, method=%r)' % (
            self.model, self.horizon, self.method)

    def __call__(self, t):
        """Returns ``(y1, dy1, y2, dy2)`` at time(s) `t`."""
        arr = np.asarray(t, dtype=float)
        slack = 1e-12 * max(1.0, self.horizon)
        if np.any(arr < -slack) or np.any(arr > self.horizon + slack):
            raise DomainError('Fundamental pair is solved on [0, %g] only'
                              % self.horizon)
        arr = np.clip(arr, 0.0, self.horizon)
        return tuple(self._evaluator(arr))

    def y1(self, t):
        return self(t)[0]

    def dy1(self, t):
        return self(t)[1]

    def y2(self, t):
        return self(t)[2]

    def dy2(self, t):
        return self(t)[3]

    def wronskian(self, t):
        y1, dy1, y2, dy2 = self(t)
        return y1 * dy2 - dy1 * y2

    def wronskian_error(self, t):
        """Largest deviation of the Wronskian from one over times `t`."""
        return float(np.max(np.abs(self.wronskian(t) - 1.0)))

    def samples(self, t):
        """Dense samples as rows ``(t, y1, y2, dy1, dy2, wronskian)``."""
        t = np.asarray(t, dtype=float)
        y1, dy1, y2, dy2 = self(t)
        return np.column_stack([t, y1, y2, dy1, dy2, y1 * dy2 - dy1 * y2])


def _solve_numeric(model, horizon, tol):
    segments = []
    state = np.array([1.0, 0.0, 0.0, 1.0])
    for start, end, sigma in model.pieces(horizon):
        if callable(sigma):
            def rhs(t, y, sigma=sigma):
                s = sigma(t)
                return [y[1], -s * y[0], y[3], -s * y[2]]
        else:
            def rhs(t, y, s=sigma):
                return [y[1], -s * y[0], y[3], -s * y[2]]
        sol = solve_ivp(rhs, (start, end), state, method='DOP853',
                        rtol=tol, atol=tol * 1e-2, dense_output=True)
        if not sol.success:
            raise NonConvergence('ODE integration failed on [%g, %g]: %s'
                                 % (start, end, sol.message))
        log.debug('Solved [%g, %g] with %d steps', start, end, sol.t.size)
        segments.append((start, end, sol.sol))
        state = sol.y[:, -1]
    return _NumericForm(segments)


def solve_fundamental(model, horizon, tol=ODE_TOL, method=None,
                      wronskian_tol=WRONSKIAN_TOL):
    """Constructs the fundamental solutions on ``[0, horizon]``.

    :param model: sigma model.
    :type model: :class:`OscillatorModel`

    :param horizon: End of the evaluation range.
    :type horizon: float

    :param tol: Relative tolerance of the adaptive integrator.
    :type tol: float

    :param method: :data:`~tdnls.constants.CLOSED_FORM` or
                   :data:`~tdnls.constants.NUMERIC_ODE`; closed form is used
                   whenever the model has one.
    :type method: str

    :rtype: :class:`FundamentalPair`

    :raises:
        * :exc:`~tdnls.exceptions.DomainError` if sigma is not evaluable.
        * :exc:`~tdnls.exceptions.NonConvergence` if the integration fails
          or the Wronskian drifts beyond `wronskian_tol`.
    """
    if not tol > 0:
        raise ValueError('Tolerance should be positive, got %r' % tol)
    model.check_range(horizon)
    if method is None:
        method = CLOSED_FORM if model.has_closed_form else NUMERIC_ODE
    if method == CLOSED_FORM:
        if not model.has_closed_form:
            raise DomainError('No closed form for %r' % model.kind)
        evaluator = _ClosedForm(model)
    elif method == NUMERIC_ODE:
        evaluator = _solve_numeric(model, horizon, tol)
    else:
        raise ValueError('Unknown method %r' % method)
    pair = FundamentalPair(model, horizon, method, evaluator, wronskian_tol)
    error = pair.wronskian_error(np.linspace(0.0, horizon, WRONSKIAN_SAMPLES))
    if not error <= wronskian_tol:
        raise NonConvergence('Wronskian drifted by %g (tolerance %g)'
                             % (error, wronskian_tol))
    log.info('Fundamental pair for %r on [0, %g] by %s, Wronskian error %.2e',
             model.kind, horizon, method, error)
    return pair


def _log_fit(t, values):
    slope, intercept = np.polyfit(np.log(t), np.log(values), 1)
    fitted = slope * np.log(t) + intercept
    residual = math.sqrt(float(np.mean((np.log(values) - fitted) ** 2)))
    return float(slope), float(intercept), residual


def _tail_times(T0, horizon, samples):
    start = 0.5 * (T0 + horizon)
    return np.geomspace(start, horizon, samples)


def check_conditions(pair, T0, horizon, delta_min=DELTA_MIN,
                     samples=CONDITION_SAMPLES, min_samples=MIN_FIT_SAMPLES):
    """Probes conditions (A)-(C) on ``[T0, horizon]``.

    ``c0`` is the smallest ``|y2|`` on a uniform sample grid. ``delta`` is
    minus the least squares slope of ``log |y1 / y2|`` against ``log t``
    over the last half of the range; the fitted prefactor is reported
    without being judged.

    :rtype: :class:`~tdnls.records.ConditionReport`

    :raises: :exc:`~tdnls.exceptions.InsufficientRange` if fewer than
             `min_samples` usable points remain.
    """
    if not horizon > T0:
        raise InsufficientRange('Horizon %g does not exceed T0 %g'
                                % (horizon, T0))
    if samples < min_samples:
        raise InsufficientRange('%d samples requested, %d needed'
                                % (samples, min_samples))
    t = np.linspace(T0, horizon, samples)
    y1, dy1, y2, dy2 = pair(t)
    c0 = float(np.min(np.abs(y2)))
    ok_A = c0 > C0_FLOOR
    ok_B = bool(np.all(np.isfinite([y1, dy1, y2, dy2])))
    tail = _tail_times(T0, horizon, samples) if horizon > 0 else t
    r1, _, r2, _ = pair(tail)
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = np.abs(r1 / r2)
    usable = np.isfinite(ratio) & (ratio > 0) & (tail > 0)
    if usable.sum() < min_samples:
        raise InsufficientRange('Only %d usable samples of |y1/y2|'
                                % usable.sum())
    slope, intercept, _ = _log_fit(tail[usable], ratio[usable])
    delta = -slope
    report = ConditionReport(T0=T0, horizon=horizon, samples=samples, c0=c0,
                             delta=delta, prefactor=math.exp(intercept),
                             ok_A=ok_A, ok_B=ok_B,
                             ok_C=ok_A and delta >= delta_min)
    log.info('Conditions on [%g, %g]: c0=%.3g delta=%.4f A=%s B=%s C=%s',
             T0, horizon, c0, delta, report.ok_A, report.ok_B, report.ok_C)
    return report


class OscillatorDerived(object):
    """Clocks ``Y`` and ``Y2`` of a fundamental pair for given ``n, p``.

    Immutable after construction.
    """

    def __init__(self, pair, n, p, T0, horizon, conditions,
                 quad_tol=QUAD_TOL, panels=Y2_PANELS):
        self.pair = pair
        self.n = int(n)
        self.p = float(p)
        self.T0 = float(T0)
        self.horizon = float(horizon)
        self.conditions = conditions
        self.c0 = conditions.c0
        self.delta = conditions.delta
        self.quad_tol = quad_tol
        #: Exponent ``n (p - 1) / 2`` of the dissipation weight.
        self.weight_exponent = self.n * (self.p - 1.0) / 2.0
        if T0 > 0:
            self._knots = np.geomspace(T0, horizon, panels + 1)
        else:
            self._knots = np.linspace(T0, horizon, panels + 1)
        parts = [self._quad(a, b)
                 for a, b in zip(self._knots[:-1], self._knots[1:])]
        self._cumulative = np.concatenate([[0.0], np.cumsum(parts)])
        self._nodes, self._weights = roots_legendre(Y2_NODES)

    def __repr__(self):
        return 'OscillatorDerived(n=%d, p=%r, T0=%r, horizon=%r)' % (
            self.n, self.p, self.T0, self.horizon)

    def weight(self, t):
        """``|y2(t)|^(-n (p - 1) / 2)``."""
        return np.abs(self.pair.y2(t)) ** (-self.weight_exponent)

    def _quad(self, a, b):
        if a == b:
            return 0.0
        value, error = quad(lambda s: float(self.weight(s)), a, b,
                            epsabs=self.quad_tol / Y2_PANELS, epsrel=1e-10,
                            limit=200)
        if error > self.quad_tol:
            log.debug('Y2 panel [%g, %g] error estimate %.2e', a, b, error)
        return value

    def Y(self, t):
        """``y2 / (2 y1)``."""
        y1, _, y2, _ = self.pair(t)
        return y2 / (2.0 * y1)

    def dY(self, t):
        """``1 / (2 y1^2)``, the derivative of :meth:`Y`."""
        return 1.0 / (2.0 * self.pair.y1(t) ** 2)

    def bracket_Y(self, t):
        """Japanese bracket ``(1 + Y^2)^(1/2)``."""
        return np.sqrt(1.0 + self.Y(t) ** 2)

    def Y2(self, t):
        """``\\int_{T0}^t |y2|^(-n (p - 1) / 2)``, vectorized over `t`.

        Knot values are tabulated once; the remainder from the knot below
        each point is a Gauss-Legendre sum evaluated in one pass.
        """
        arr = np.asarray(t, dtype=float)
        flat = np.atleast_1d(arr).ravel()
        k = np.clip(np.searchsorted(self._knots, flat) - 1,
                    0, len(self._knots) - 2)
        start = self._knots[k]
        half = 0.5 * (flat - start)
        nodes = start[:, None] + half[:, None] * (self._nodes + 1.0)
        with np.errstate(divide='ignore', invalid='ignore'):
            values = self.weight(nodes.ravel()).reshape(nodes.shape)
            partial = half * values.dot(self._weights)
        for i in np.flatnonzero(~np.isfinite(partial)):
            partial[i] = self._quad(start[i], flat[i])
        out = self._cumulative[k] + partial
        return out.reshape(arr.shape) if arr.ndim else float(out[0])

    def derivative_residual(self, t, h=1e-5):
        """Largest ``|Y'(t) 2 y1(t)^2 - 1|`` with central differences."""
        t = np.asarray(t, dtype=float)
        slope = (self.Y(t + h) - self.Y(t - h)) / (2.0 * h)
        return float(np.max(np.abs(slope * 2.0 * self.pair.y1(t) ** 2 - 1.0)))


def build_derived(pair, n, p, T0, horizon=None, quad_tol=QUAD_TOL,
                  floor=Y1_FLOOR):
    """Builds the ``Y`` and ``Y2`` clocks on ``[T0, horizon]``.

    :param pair: Fundamental solutions.
    :type pair: :class:`FundamentalPair`

    :param n: Spatial dimension.
    :param p: Nonlinearity exponent, > 1.
    :param T0: Start of the clocks, ``Y2(T0) = 0``.

    :rtype: :class:`OscillatorDerived`

    :raises:
        * :exc:`~tdnls.exceptions.SingularY1` if ``y1`` vanishes on the range.
        * :exc:`~tdnls.exceptions.DomainError` if condition (A) fails.
    """
    horizon = pair.horizon if horizon is None else float(horizon)
    if not p > 1:
        raise DomainError('Exponent p should exceed 1, got %r' % p)
    if int(n) < 1:
        raise DomainError('Dimension should be positive, got %r' % n)
    y1 = pair.y1(np.linspace(T0, horizon, Y1_SAMPLES))
    if np.any(np.abs(y1) < floor) or np.any(np.sign(y1) != np.sign(y1[0])):
        raise SingularY1('y1 vanishes on [%g, %g]' % (T0, horizon))
    conditions = check_conditions(pair, T0, horizon)
    if not conditions.ok_A:
        raise DomainError('|y2| vanishes on [%g, %g]: condition (A) fails'
                          % (T0, horizon))
    return OscillatorDerived(pair, n, p, T0, horizon, conditions, quad_tol)
