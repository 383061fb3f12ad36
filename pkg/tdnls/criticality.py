# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Criticality classification, threshold exponents and predicted decay laws.

A configuration is critical when ``t |y2(t)|^(-n (p - 1) / 2)`` tends to a
positive constant ``c_+``. Writing ``|y2|^(-n (p - 1) / 2) ~ c t^(-alpha)``
on the tail, ``alpha < 1`` is sub-critical with ``delta_* = 1 - alpha`` and
``alpha > 1`` is super-critical with ``delta^* = alpha - 1``.
"""

import logging
import math

import numpy as np

from .constants import (
    CRITICAL, SUB_CRITICAL, SUPER_CRITICAL, ZERO,
    CONDITION_SAMPLES, TOL_CLASS, MAX_TAIL_RESIDUAL, THETA_FRACTION,
    THETA_CEILING,
)
from .exceptions import DomainError, NotApplicable
from .oscillator import check_conditions
from .records import CriticalityReport, RatePrediction, ThresholdExponents

log = logging.getLogger(__name__)

__all__ = ['Nonlinearity', 'classify', 'threshold_exponents',
           'strong_dissipation', 'predicted_rates', 'envelope', 'calibrate',
           'gamma_of', 'theta_window', 'default_theta']


class Nonlinearity(object):
    """Power nonlinearity ``lambda |u|^(p-1) u``.

    ``Im lambda`` must not be positive. ``lambda = 0`` is accepted and
    describes a linear run.
    """

    def __init__(self, p, lambda_re=0.0, lambda_im=-1.0):
        if not p > 1:
            raise DomainError('Exponent p should exceed 1, got %r' % p)
        if lambda_im > 0:
            raise DomainError('Im lambda should not be positive, got %r'
                              % lambda_im)
        self.p = float(p)
        self.lambda_re = float(lambda_re)
        self.lambda_im = float(lambda_im)

    def __repr__(self):
        return 'Nonlinearity(p=%r, lambda=%r)' % (self.p, self.lam)

    @property
    def lam(self):
        return complex(self.lambda_re, self.lambda_im)

    @property
    def dissipation(self):
        """``|Im lambda|``."""
        return abs(self.lambda_im)

    @property
    def is_linear(self):
        return self.lambda_re == 0 and self.lambda_im == 0

    @property
    def is_dissipative(self):
        return self.lambda_im < 0


def gamma_of(n):
    return 0.5 if n == 1 else 1.0


def theta_window(n, p):
    """Admissible ``(0, n (1 - p) / 2 + gamma p)``; may be empty."""
    return 0.0, n * (1.0 - p) / 2.0 + gamma_of(n) * p


def default_theta(n, p):
    low, high = theta_window(n, p)
    if not high > low:
        return None
    return min(THETA_FRACTION * high, THETA_CEILING)


def threshold_exponents(n):
    """Returns the exponents ``p(n)``, ``p_*(n)`` and ``p_**(n)``.

    :param n: Spatial dimension.
    :type n: int

    :rtype: :class:`~tdnls.records.ThresholdExponents`
    """
    n = int(n)
    if n < 1:
        raise ValueError('Dimension should be positive, got %r' % n)
    if n == 1:
        p_n = 1.0 + math.sqrt(2.0)
    else:
        p_n = (3.0 + math.sqrt(n * n + 2.0 * n + 9.0)) / (n + 2.0)
    p_star = (n * n + 3.0 * n + 6.0 + math.sqrt(9.0 * n * n + 28.0 * n + 36.0)) \
        / (n + 2.0) ** 2
    if n == 1:
        p_star_star = 2.0
    elif n == 2:
        p_star_star = 1.0
    else:
        p_star_star = (4.0 + n) / (2.0 + n)
    return ThresholdExponents(n=n, p_n=p_n, p_star=p_star,
                              p_star_star=p_star_star)


def strong_dissipation(nl):
    """Checks ``(p - 1) / (2 sqrt(p)) |Re lambda| <= |Im lambda|``."""
    lhs = (nl.p - 1.0) / (2.0 * math.sqrt(nl.p)) * abs(nl.lambda_re)
    rhs = abs(nl.lambda_im)
    return lhs <= rhs or math.isclose(lhs, rhs, rel_tol=1e-12)


def classify(pair, n, p, T0, horizon, tol_class=TOL_CLASS, nl=None, s=None,
             samples=CONDITION_SAMPLES, max_residual=MAX_TAIL_RESIDUAL):
    """Classifies ``(n, p, sigma)`` as critical, sub- or super-critical.

    The tail exponent ``alpha`` of ``|y2|^(-n (p - 1) / 2)`` is fitted in log
    coordinates over the last half of ``[T0, horizon]``. A tail fit with
    log-scale RMS above `max_residual` gives ``indeterminate``.

    :param nl: Nonlinearity; fills the strong dissipation flag when given.
    :type nl: :class:`Nonlinearity`

    :param s: Sobolev regularity; fills ``s1`` when given.
    :type s: float

    :rtype: :class:`~tdnls.records.CriticalityReport`
    """
    n = int(n)
    a = n * (p - 1.0) / 2.0
    conditions = check_conditions(pair, T0, horizon)
    if not conditions.ok:
        log.warning('Conditions (A)-(C) do not all hold on [%g, %g]',
                    T0, horizon)
    t = np.geomspace(0.5 * (T0 + horizon), horizon, samples)
    y2 = np.abs(pair.y2(t))
    report = CriticalityReport(n=n, p=p, conditions=conditions,
                               delta=conditions.delta,
                               thresholds=threshold_exponents(n),
                               gamma=gamma_of(n))
    low, high = theta_window(n, p)
    report.theta_low, report.theta_high = low, high
    report.theta = default_theta(n, p)
    if s is not None:
        report.s = s
        report.s1 = min(s - n / 2.0, 1.0)
    if nl is not None:
        report.strong_dissipation = strong_dissipation(nl)
    if not np.all(np.isfinite(y2)) or np.any(y2 <= 0):
        log.warning('y2 vanishes on the tail; classification indeterminate')
        return report
    logt = np.log(t)
    beta, _ = np.polyfit(logt, np.log(y2), 1)
    report.y2_exponent = float(beta)
    weight = y2 ** (-a)
    slope, intercept = np.polyfit(logt, np.log(weight), 1)
    residual = math.sqrt(float(np.mean(
        (np.log(weight) - slope * logt - intercept) ** 2)))
    alpha = -float(slope)
    report.alpha = alpha
    report.tail_residual = residual
    known = pair.model.y2_exponent
    growth = known if known is not None else float(beta)
    if growth > 0:
        report.p_critical = 1.0 + 2.0 / (n * growth)
    if residual > max_residual:
        log.warning('Tail fit residual %.3g exceeds %.3g; indeterminate',
                    residual, max_residual)
        return report
    report.c_plus = math.exp(intercept)
    if abs(alpha - 1.0) <= tol_class:
        report.classification = CRITICAL
    elif alpha < 1.0:
        report.classification = SUB_CRITICAL
        report.delta_star = 1.0 - alpha
    else:
        report.classification = SUPER_CRITICAL
        report.delta_upper = alpha - 1.0
    log.info('n=%d p=%g: alpha=%.4f -> %s', n, p, alpha,
             report.classification)
    return report


def _prediction(theorem, norm, variable, formula, applicable, reason='',
                exponent=None, exponent2=None, **parameters):
    return RatePrediction(theorem=theorem, norm=norm, variable=variable,
                          formula=formula, exponent=exponent,
                          exponent2=exponent2, parameters=parameters,
                          applicable=applicable, reason=reason or None)


def _small_data(report, n, p, s, nl, norm0, l2_0):
    reasons = []
    if not 1 <= n <= 3:
        reasons.append('n outside 1..3')
    if s is None or not n / 2.0 < s < p:
        reasons.append('s outside (n/2, p)')
    if not nl.is_dissipative:
        reasons.append('Im lambda is not negative')
    fine = not reasons
    critical = report.classification == CRITICAL
    why = '; '.join(reasons) or ('' if critical else 'p is not critical')
    yield _prediction('small_data.linf', 'linf', 'linf',
                      'C |y2|^(-n/2) Y2^(-1/(p-1))', fine and critical, why,
                      exponent=-1.0 / (p - 1.0))
    if s is not None:
        yield _prediction('small_data.l2', 'l2', 'Y2',
                          'C Y2^(-s/((p-1)(s+n)))', fine and critical, why,
                          exponent=-s / ((p - 1.0) * (s + n)), s=s)
    yield _prediction('small_data.hs_half', 'hs_half', 'bounded',
                      'sup ||u||_{H^{s/2}} < C', fine and critical, why,
                      exponent=0.0)
    super_ = report.classification == SUPER_CRITICAL
    why = '; '.join(reasons) or ('' if super_ else 'p is not super-critical')
    params = dict(lambda_im=nl.lambda_im, p=p)
    if norm0 is not None:
        params['norm0'] = norm0
    if l2_0 is not None:
        params['l2_0'] = l2_0
    yield _prediction('small_data.lower_bound', 'l2', 'lower',
                      'exp(-C |Im lambda| ||u0||_{H^{s,s}}^p) ||u0||_2',
                      fine and super_, why, **params)


def _strong(report, n, p, nl):
    reasons = []
    if not strong_dissipation(nl) or nl.is_linear:
        reasons.append('strong dissipation fails')
    if n >= 3 and not p < n / (n - 2.0):
        reasons.append('p >= n/(n-2)')
    if report.classification not in (CRITICAL, SUB_CRITICAL):
        reasons.append('p is neither critical nor sub-critical')
    theta, delta = report.theta, report.delta
    if theta is None:
        reasons.append('theta window is empty')
    if report.classification == SUB_CRITICAL and theta is not None \
            and not report.delta_star < delta * theta / 2.0:
        reasons.append('delta_* >= delta theta / 2')
    fine = not reasons
    why = '; '.join(reasons)
    if report.classification == SUB_CRITICAL:
        ds = report.delta_star
        second = ds - delta * theta / 2.0 if theta is not None else None
        yield _prediction('strong_dissipation.l2', 'l2', 'max_t',
                          'C max(t^(-2 delta_*/((p-1)(2+n))),'
                          ' t^(delta_* - delta theta/2))', fine, why,
                          exponent=-2.0 * ds / ((p - 1.0) * (2.0 + n)),
                          exponent2=second, delta_star=ds, delta=delta,
                          theta=theta if theta is not None else float('nan'))
    else:
        yield _prediction('strong_dissipation.l2', 'l2', 'Y2',
                          'C Y2^(-2/((p-1)(2+n)))', fine, why,
                          exponent=-2.0 / ((p - 1.0) * (2.0 + n)))
    yield _prediction('strong_dissipation.gradient', 'gradient', 'bounded',
                      '||grad u|| <= C ||grad u0||', fine, why, exponent=0.0)
    yield _prediction('strong_dissipation.weighted', 'weighted', 'bounded',
                      '||U0 |x| U0^-1 u|| <= C || |x| u0 ||', fine, why,
                      exponent=0.0)


def _free(report, n, p, nl):
    th = report.thresholds
    delta_star = 1.0 - n * (p - 1.0) / 2.0
    # sigma = 0 leaves theta in (0, 1) free.
    theta = THETA_CEILING
    first = -2.0 * delta_star / ((p - 1.0) * (2.0 + n))
    endpoint = math.isclose(p, th.p_star_star, rel_tol=1e-12)
    reasons = []
    if not strong_dissipation(nl) or nl.is_linear:
        reasons.append('strong dissipation fails')
    if not p < 1.0 + 2.0 / n:
        reasons.append('p >= 1+2/n')
    if endpoint:
        yield _prediction('free.l2', 'l2', 't', 'C t^(-2 delta_*/((p-1)(2+n)))',
                          not reasons, '; '.join(reasons), exponent=first,
                          delta_star=delta_star, endpoint=1.0)
    elif p >= th.p_star:
        yield _prediction('free.l2', 'l2', 't', 'C t^(-2 delta_*/((p-1)(2+n)))',
                          not reasons, '; '.join(reasons), exponent=first,
                          delta_star=delta_star)
    elif p > th.p_star_star:
        if not delta_star < theta / 2.0:
            reasons.append('delta_* >= delta theta / 2')
        yield _prediction('free.l2', 'l2', 't', 'C t^(delta_* - theta/2)',
                          not reasons, '; '.join(reasons),
                          exponent=delta_star - theta / 2.0,
                          delta_star=delta_star, theta=theta, delta=1.0)
    else:
        reasons.append('p below p**')
        yield _prediction('free.l2', 'l2', 't', 'C t^(-2 delta_*/((p-1)(2+n)))',
                          False, '; '.join(reasons), exponent=first,
                          delta_star=delta_star)


def predicted_rates(report, n, p, s, nl, derived=None, norm0=None,
                    l2_0=None):
    """Lists the decay laws the theorems predict for a configuration.

    Every law is returned; those whose hypotheses fail are flagged with
    ``applicable = False`` and a reason, and :func:`envelope` refuses to
    evaluate them.

    :param report: Outcome of :func:`classify`.
    :type report: :class:`~tdnls.records.CriticalityReport`

    :param s: Sobolev regularity of the small data theorem.
    :param nl: Nonlinearity.
    :param derived: Oscillator clocks; selects the free law when sigma = 0.
    :param norm0: ``H^{s,s}`` norm of the initial data, for the lower bound.
    :param l2_0: ``L^2`` norm of the initial data, for the lower bound.

    :return: list of :class:`~tdnls.records.RatePrediction`.
    """
    n = int(n)
    rates = list(_small_data(report, n, p, s, nl, norm0, l2_0))
    rates.extend(_strong(report, n, p, nl))
    if derived is not None and derived.pair.model.kind == ZERO:
        rates.extend(_free(report, n, p, nl))
    rates.append(_prediction(
        'profile_law.l2', 'l2', 'Y2', 'C Y2^(-1/(p-1))',
        nl.is_dissipative and report.classification in (CRITICAL,
                                                        SUB_CRITICAL),
        '' if nl.is_dissipative else 'Im lambda is not negative',
        exponent=-1.0 / (p - 1.0)))
    report.predicted = rates
    return rates


def envelope(prediction, derived, t, constant=1.0, force=False):
    """Evaluates a predicted law at time(s) `t`.

    :param constant: The unspecified constant ``C`` of the law.
    :param force: Evaluate even when the hypotheses fail.

    :raises: :exc:`~tdnls.exceptions.NotApplicable` for laws whose
             hypotheses fail, unless `force` is set.
    """
    if not (prediction.applicable or force):
        raise NotApplicable('%s: %s' % (prediction.theorem, prediction.reason))
    t = np.asarray(t, dtype=float)
    kind, e = prediction.variable, prediction.exponent
    if kind == 't':
        return constant * t ** e
    if kind == 'Y2':
        return constant * derived.Y2(t) ** e
    if kind == 'linf':
        y2 = np.abs(derived.pair.y2(t))
        return constant * y2 ** (-derived.n / 2.0) * derived.Y2(t) ** e
    if kind == 'max_t':
        return constant * np.maximum(t ** e, t ** prediction.exponent2)
    if kind == 'bounded':
        return constant * np.ones_like(t)
    params = prediction.parameters
    level = params.get('l2_0', 1.0)
    norm0 = params.get('norm0', 1.0)
    return level * math.exp(-constant * abs(params['lambda_im'])
                            * norm0 ** params['p']) * np.ones_like(t)


def calibrate(prediction, derived, t_ref, measured):
    """Chooses ``C`` so that the law matches `measured` at `t_ref`."""
    if prediction.variable == 'lower':
        params = prediction.parameters
        level = params.get('l2_0', 1.0)
        scale = abs(params['lambda_im']) * params.get('norm0', 1.0) \
            ** params['p']
        if measured >= level or scale == 0:
            return 0.0
        return -math.log(measured / level) / scale
    shape = float(envelope(prediction, derived, t_ref, 1.0, force=True))
    return measured / shape
