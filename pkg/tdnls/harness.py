# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Experiments: decay fits, sweeps, the dispersive bound check and reports.

A sweep expands an :class:`ExperimentSpec` into independent runs over
models, exponents, amplitudes and refinement levels. Runs are executed in a
process pool driven by :mod:`asyncio` (or serially with one worker); results
come back in sweep order, so the bundle does not depend on scheduling.
"""

import asyncio
import functools
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .codec import dump_field, dump_json, to_jsonable, write_csv
from .constants import (
    ORIGINAL, LENS, ZERO, POWER_OF_T, POWER_OF_Y2, LOG_POWER, PLATEAU,
    FIT_MODELS, EXPONENT_TOLERANCE,
)
from .criticality import (
    Nonlinearity, calibrate, classify, predicted_rates,
)
from .exceptions import (
    BaseTDNLSError, ConfigError, DegenerateData, InsufficientRange,
)
from .oscillator import OscillatorModel
from .profile import (
    amplitude_ode, compare_pde_vs_ode, comparison_rows, track_profile,
)
from .records import FitResult, KorotyaevReport
from .solver import InitialData, RunRecord, SimConfig, cross_validate, evolve
from .spectral import weighted_sobolev_norm

log = logging.getLogger(__name__)

__all__ = ['fit_series', 'fit_decay', 'ExperimentSpec', 'run_point',
           'run_experiment', 'korotyaev_check', 'write_bundle',
           'summarize', 'format_report']

#: Fewest samples a fit window may hold.
MIN_WINDOW_POINTS = 3
#: Allowed growth of the dispersive ratio over the last quarter of a run.
KOROTYAEV_GROWTH = 0.1
#: Result keys kept out of the JSON summary.
HEAVY_KEYS = ('series', 'final_field', 'profile_rows', 'cross_rows')

COMPARISONS = ('ledger', 'cross_validate', 'profile', 'fits')


def fit_series(times, values, model=POWER_OF_T, derived=None, window=None,
               quantity='l2'):
    """Least squares fit of a positive series in log coordinates.

    ``power_of_t`` regresses ``log y`` on ``log t``, ``power_of_y2`` on
    ``log Y2(t)`` and ``log_power`` on ``log log t``; the fitted value is
    the slope. ``plateau`` regresses on ``log t`` too but reports the mean
    level, the slope telling whether the series still decays.

    :param window: ``(start, end)``; the whole series by default.

    :rtype: :class:`~tdnls.records.FitResult`

    :raises:
        * :exc:`~tdnls.exceptions.InsufficientRange` if the window holds
          fewer than three samples.
        * :exc:`~tdnls.exceptions.DegenerateData` on non-positive values or
          an unusable abscissa.
    """
    if model not in FIT_MODELS:
        raise ValueError('Unknown fit model %r' % model)
    t = np.asarray(times, dtype=float)
    y = np.asarray(values, dtype=float)
    if window is not None:
        start, end = window
        slack = 1e-9 * max(1.0, abs(end))
        mask = (t >= start - slack) & (t <= end + slack)
        t, y = t[mask], y[mask]
    if t.size < MIN_WINDOW_POINTS:
        raise InsufficientRange('Fit window holds %d samples' % t.size)
    if not np.all(np.isfinite(y) & (y > 0)):
        raise DegenerateData('%s is not strictly positive on the window'
                             % quantity)
    if model == POWER_OF_Y2:
        if derived is None:
            raise DegenerateData('Fits against Y2 need the oscillator clocks')
        x = np.asarray(derived.Y2(t), dtype=float)
    elif model == LOG_POWER:
        x = np.log(t)
    else:
        x = t
    if not np.all(x > 0):
        raise DegenerateData('Fit abscissa is not positive on the window')
    x = np.log(x)
    if np.ptp(x) == 0:
        raise DegenerateData('Fit abscissa is constant on the window')
    ly = np.log(y)
    slope, intercept = np.polyfit(x, ly, 1)
    residual = math.sqrt(float(np.mean((ly - slope * x - intercept) ** 2)))
    fitted = float(np.mean(y)) if model == PLATEAU else float(slope)
    return FitResult(quantity=quantity, model=model, fitted_value=fitted,
                     slope=float(slope), intercept=float(intercept),
                     residual=residual, window_start=float(t[0]),
                     window_end=float(t[-1]), points=int(t.size))


def default_window(record):
    """Last half of ``[T0, t_end]``, clipped to the recorded span."""
    times = record.times
    T0 = record.config.model.T0
    return max(0.5 * (T0 + times[-1]), times[0]), times[-1]


def fit_decay(record, derived=None, quantity='l2', model=POWER_OF_T,
              window=None):
    """Fits a recorded norm against a decay model.

    :param record: Run diagnostics.
    :type record: :class:`~tdnls.solver.RunRecord`

    :param derived: Oscillator clocks, needed by ``power_of_y2``.

    :param window: ``(start, end)``, the last half of ``[T0, t_end]`` by
                   default.

    :rtype: :class:`~tdnls.records.FitResult`
    """
    window = window or default_window(record)
    return fit_series(record.array('t'), record.array(quantity), model,
                      derived, window, quantity)


def _model_with_kind(model, kind):
    if kind == model.kind:
        return model
    return OscillatorModel(kind=kind, t_start=model.t_start, T0=model.T0,
                           glue=model.glue, sigma0=model.sigma0,
                           rho=model.rho, omega2=model.omega2,
                           strength=model.strength, decay=model.decay,
                           knots=model.knots, values=model.table,
                           sigma_fn=model.sigma_fn)


class ExperimentSpec(object):
    """A base configuration together with its sweep axes.

    Empty axes keep the base value. Refinement level ``k`` divides the time
    step by ``2^k`` and, with `refine_grid`, multiplies the points per axis
    by ``2^k``.
    """

    def __init__(self, base, amplitudes=None, powers=None, models=None,
                 refinement=1, refine_grid=False, workers=1,
                 comparisons=('ledger', 'fits'), interior_s=None,
                 fit_quantity='l2', fit_model=POWER_OF_T, window=None,
                 tolerance=EXPONENT_TOLERANCE, out=None):
        unknown = set(comparisons) - set(COMPARISONS)
        if unknown:
            raise ConfigError('Unknown comparisons: %s'
                              % ', '.join(sorted(unknown)))
        if int(refinement) < 1 or int(workers) < 1:
            raise ConfigError('refinement and workers should be positive')
        if fit_model not in FIT_MODELS:
            raise ConfigError('Unknown fit model %r' % fit_model)
        self.base = base
        self.amplitudes = list(amplitudes or [])
        self.powers = list(powers or [])
        self.models = list(models or [])
        self.refinement = int(refinement)
        self.refine_grid = bool(refine_grid)
        self.workers = int(workers)
        self.comparisons = tuple(comparisons)
        self.interior_s = interior_s
        self.fit_quantity = fit_quantity
        self.fit_model = fit_model
        self.window = window
        self.tolerance = float(tolerance)
        self.out = out

    def __repr__(self):
        return 'ExperimentSpec(%r, runs=%d)' % (self.base, len(self.points()))

    def points(self):
        """Expands the sweep into ``(label, key, level, config)`` tuples."""
        base = self.base
        models = self.models or [base.model.kind]
        powers = self.powers or [base.nl.p]
        amplitudes = self.amplitudes or [base.initial.amplitude]
        points = []
        for kind in models:
            model = _model_with_kind(base.model, kind)
            for p in powers:
                nl = Nonlinearity(p, base.nl.lambda_re, base.nl.lambda_im)
                for amplitude in amplitudes:
                    initial = base.initial.replace(amplitude=amplitude)
                    for level in range(self.refinement):
                        factor = 2 ** level
                        grid = base.grid
                        if self.refine_grid and level:
                            grid = type(grid)(grid.n, grid.points * factor,
                                              grid.L, grid.scale)
                        config = base.replace(
                            model=model, nl=nl, initial=initial, grid=grid,
                            dt=base.dt / factor,
                            record_every=base.record_every * factor)
                        label = '%s-p%g-a%g-r%d' % (kind, p, amplitude, level)
                        points.append((label, (kind, p, amplitude), level,
                                       config))
        return points


def describe(config):
    """Plain dictionary identifying a configuration."""
    return {
        'n': config.grid.n, 'points': config.grid.points, 'L': config.grid.L,
        'model': config.model.kind, 'p': config.nl.p,
        'lambda_re': config.nl.lambda_re, 'lambda_im': config.nl.lambda_im,
        'frame': config.frame, 'splitting': config.splitting,
        'dt': config.dt, 't0': config.t0, 't_end': config.t_end,
        'amplitude': config.initial.amplitude, 'initial': config.initial.kind,
        'seed': config.seed,
    }


def _series_for(record, prediction, derived):
    t = record.array('t')
    values = record.array(prediction.norm)
    if prediction.variable == 'linf':
        y2 = np.abs(derived.pair.y2(t))
        values = values * y2 ** (derived.n / 2.0)
    return t, values


def _compare(prediction, record, derived, window, tolerance):
    row = {'theorem': prediction.theorem, 'norm': prediction.norm,
           'variable': prediction.variable,
           'applicable': prediction.applicable, 'reason': prediction.reason,
           'predicted': None, 'measured': None, 'relative_error': None,
           'within_tolerance': None, 'constant': None}
    t, values = _series_for(record, prediction, derived)
    kind = prediction.variable
    try:
        if kind == 'bounded':
            row['measured'] = float(np.max(values) / values[0])
            return row
        if kind == 'lower':
            fit = fit_series(t, values, PLATEAU, window=window,
                             quantity=prediction.norm)
            row['measured'] = fit.slope
            row['constant'] = calibrate(prediction, derived, t[-1],
                                        values[-1])
            return row
        if kind in ('t', 'max_t'):
            fit = fit_series(t, values, POWER_OF_T, window=window,
                             quantity=prediction.norm)
            predicted = prediction.exponent
            if kind == 'max_t' and prediction.exponent2 is not None:
                predicted = max(predicted, prediction.exponent2)
        else:
            fit = fit_series(t, values, POWER_OF_Y2, derived, window,
                             prediction.norm)
            predicted = prediction.exponent
        row['predicted'] = predicted
        row['measured'] = fit.slope
        if predicted:
            error = abs(fit.slope - predicted) / abs(predicted)
            row['relative_error'] = error
            row['within_tolerance'] = error <= tolerance
        row['constant'] = calibrate(prediction, derived, t[-1], values[-1])
    except BaseTDNLSError as err:
        row['error'] = '%s: %s' % (err.__class__.__name__, err)
    return row


def _fits(record, config, quantity, model, window, tolerance):
    out = {}
    window = window or default_window(record)
    try:
        derived = config.derived()
    except BaseTDNLSError as err:
        log.warning('No oscillator clocks for %r: %s', config, err)
        derived = None
    try:
        out['fit'] = fit_decay(record, derived, quantity, model, window)
    except BaseTDNLSError as err:
        out['fit_error'] = '%s: %s' % (err.__class__.__name__, err)
    if derived is None:
        out['comparisons'] = []
        return out
    n, p, s = config.grid.n, config.nl.p, config.s
    report = classify(derived.pair, n, p, config.model.T0, config.span,
                      nl=config.nl, s=s)
    u0 = record.initial_state
    predicted_rates(report, n, p, s, config.nl, derived,
                    norm0=weighted_sobolev_norm(u0, s), l2_0=u0.l2_norm())
    out['criticality'] = report
    out['comparisons'] = [_compare(prediction, record, derived, window,
                                   tolerance)
                          for prediction in report.predicted]
    return out


def _profile(record, config):
    snapshots = record.snapshots
    if config.frame != LENS or not snapshots:
        snapshots = evolve(config.replace(frame=LENS, snapshot_every=1),
                           initial=record.initial_state).snapshots
    derived = config.derived()
    track = track_profile(snapshots, derived, config.nl)
    histories = amplitude_ode(track.snapshots[0], derived, config.nl,
                              track.times, track.indices)
    comparison = compare_pde_vs_ode(track, histories)
    return comparison, comparison_rows(track, histories)


def run_point(config, comparisons=('ledger', 'fits'), label=None,
              fit_quantity='l2', fit_model=POWER_OF_T, window=None,
              tolerance=EXPONENT_TOLERANCE):
    """Runs one configuration with the requested comparisons.

    Errors of the numerics are caught and reported in the result.

    :return: dict with the run summary, comparison outcomes and the heavy
             series listed in :data:`HEAVY_KEYS`.
    """
    result = {'label': label, 'config': describe(config)}
    try:
        if 'profile' in comparisons and config.frame == LENS \
                and not config.snapshot_every:
            config = config.replace(snapshot_every=1)
        record = evolve(config)
        result['run'] = record.summary()
        result['series'] = record.rows()
        result['final_field'] = record.final_state
        if 'ledger' in comparisons:
            result['ledger'] = {
                'terminal': record.terminal_residual,
                'max': max(record.ledger_residuals),
                'within_tolerance': record.terminal_residual
                <= config.ledger_tol,
            }
        if 'fits' in comparisons:
            result.update(_fits(record, config, fit_quantity, fit_model,
                                window, tolerance))
        if 'cross_validate' in comparisons:
            cv = cross_validate(config.replace(snapshot_every=0))
            result['cross_validation'] = cv
            result['cross_rows'] = list(zip(cv.times, cv.l2_discrepancy,
                                            cv.linf_discrepancy))
        if 'profile' in comparisons:
            result['profile'], result['profile_rows'] = _profile(record,
                                                                 config)
    except BaseTDNLSError as err:
        log.error('Run %s failed: %s', label, err)
        result['error'] = err.__class__.__name__
        result['message'] = str(err)
    return result


def _tasks(spec):
    return [dict(config=config, comparisons=spec.comparisons, label=label,
                 fit_quantity=spec.fit_quantity, fit_model=spec.fit_model,
                 window=spec.window, tolerance=spec.tolerance)
            for label, _, _, config in spec.points()]


async def _gather(tasks, workers):
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, functools.partial(run_point,
                                                                **task))
                   for task in tasks]
        outcomes = await asyncio.gather(*futures, return_exceptions=True)
    results = []
    for task, outcome in zip(tasks, outcomes):
        if isinstance(outcome, Exception):
            log.error('Run %s crashed: %r', task['label'], outcome)
            outcome = {'label': task['label'],
                       'config': describe(task['config']),
                       'error': outcome.__class__.__name__,
                       'message': str(outcome)}
        results.append(outcome)
    return results


def _convergence(points, results):
    groups = {}
    for (label, key, level, _), result in zip(points, results):
        groups.setdefault(key, []).append((level, result))
    rows = []
    for key, members in groups.items():
        if len(members) < 2:
            continue
        members.sort(key=lambda item: item[0])
        ledger = [m.get('ledger', {}).get('terminal') for _, m in members]
        cross = [m['cross_validation'].terminal_l2
                 if 'cross_validation' in m else None for _, m in members]
        rows.append({'model': key[0], 'p': key[1], 'amplitude': key[2],
                     'ledger': ledger, 'ledger_ratios': _ratios(ledger),
                     'cross_l2': cross, 'cross_ratios': _ratios(cross)})
    return rows


def _ratios(values):
    ratios = []
    for coarse, fine in zip(values[:-1], values[1:]):
        if coarse is None or fine is None or fine == 0:
            ratios.append(None)
        else:
            ratios.append(coarse / fine)
    return ratios


def _envelope_spread(points, results):
    groups = {}
    for (label, key, level, _), result in zip(points, results):
        for row in result.get('comparisons', []):
            constant = row.get('constant')
            if constant is None or not row['applicable']:
                continue
            group = groups.setdefault((key[0], key[1], level,
                                       row['theorem']), [])
            group.append((key[2], constant))
    rows = []
    for (kind, p, level, theorem), members in sorted(groups.items()):
        if len(members) < 2:
            continue
        values = [abs(c) for _, c in members]
        rows.append({'model': kind, 'p': p, 'level': level,
                     'theorem': theorem,
                     'amplitudes': [a for a, _ in members],
                     'constants': [c for _, c in members],
                     'spread': max(values) / min(values)
                     if min(values) > 0 else None})
    return rows


def run_experiment(spec):
    """Executes every run of a sweep and aggregates the outcomes.

    :param spec: Sweep description.
    :type spec: :class:`ExperimentSpec`

    :return: Bundle dict with ``results``, ``convergence`` and
             ``envelope_spread``; see :func:`write_bundle`.
    """
    points = spec.points()
    tasks = _tasks(spec)
    log.info('Running %d sweep points on %d worker(s)', len(tasks),
             spec.workers)
    if spec.workers == 1 or len(tasks) == 1:
        results = [run_point(**task) for task in tasks]
    else:
        results = asyncio.run(_gather(tasks, spec.workers))
    failures = sum(1 for result in results if 'error' in result)
    if failures:
        log.warning('%d of %d sweep points failed', failures, len(results))
    return {'results': results,
            'convergence': _convergence(points, results),
            'envelope_spread': _envelope_spread(points, results),
            'failures': failures}


def _unit_l1(state):
    return state.replace(values=state.values / state.l1_norm())


def korotyaev_check(model, pair, grid, data=None, t_end=None, dt=0.01,
                    interior_s=None, record_every=10):
    """Measures the pointwise dispersive bound on linear runs.

    For each start ``s`` (zero and one interior time) L1-normalized data is
    evolved with ``lambda = 0`` in the original frame, and
    ``||u(t)||_inf |y1(t) y2(s) - y1(s) y2(t)|^(n/2) / ||u(s)||_1`` is
    recorded for ``t > s``. For ``sigma = 0`` and the unit Gaussian the sup
    over ``[0, T]`` is compared with ``(1 + T^2)^(-n/4) T^(n/2) / (2 pi)^(n/2)``.

    :rtype: :class:`~tdnls.records.KorotyaevReport`
    """
    t_end = pair.horizon if t_end is None else float(t_end)
    data = data or InitialData(normalize=False)
    interior = 0.5 * t_end if interior_s is None else float(interior_s)
    starts = [0.0, interior]
    nl = Nonlinearity(3.0, 0.0, 0.0)
    n = grid.n
    sups, stable = [], True
    for s in starts:
        config = SimConfig(grid, model, nl, data, t0=s, t_end=t_end, dt=dt,
                           frame=ORIGINAL, record_every=record_every,
                           adaptive=False, horizon=pair.horizon)
        phi = _unit_l1(data.build(grid, s))
        record = evolve(config, pair=pair, initial=phi)
        t = record.array('t')[1:]
        y1t, _, y2t, _ = pair(t)
        y1s, _, y2s, _ = pair(s)
        kernel = np.abs(y1t * y2s - y1s * y2t) ** (n / 2.0)
        ratio = record.array('linf')[1:] * kernel / phi.l1_norm()
        if not np.all(np.isfinite(ratio)) or not ratio.size:
            stable = False
            sups.append(float('nan'))
            continue
        sups.append(float(np.max(ratio)))
        cut = max(1, (3 * ratio.size) // 4)
        head, tail = ratio[:cut], ratio[cut:]
        if tail.size and np.max(tail) > (1.0 + KOROTYAEV_GROWTH) \
                * np.max(head):
            stable = False
    report = KorotyaevReport(starts=starts, sup_ratio=sups, bounded=stable)
    if model.kind == ZERO and data.kind == 'gaussian' and data.width == 1.0 \
            and not any(data.center) and data.chirp == 0:
        T = t_end
        oracle = (1.0 + T * T) ** (-n / 4.0) * T ** (n / 2.0) \
            / (2.0 * math.pi) ** (n / 2.0)
        report.oracle_ratio = oracle
        report.oracle_deviation = abs(sups[0] - oracle) / oracle
    log.info('Dispersive bound sup ratios %s, bounded=%s', sups, stable)
    return report


def summarize(bundle):
    """JSON friendly copy of a bundle without the heavy series."""
    results = []
    for result in bundle.get('results', []):
        results.append(dict((key, value) for key, value in result.items()
                            if key not in HEAVY_KEYS))
    summary = dict((key, value) for key, value in bundle.items()
                   if key != 'results')
    summary['results'] = results
    return to_jsonable(summary)


def _fmt(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, float):
        return '%.4g' % value
    return str(value)


def format_report(summary):
    """Text table pairing measured and predicted exponents per run."""
    lines = []
    header = '%-36s %-30s %10s %10s %8s %6s' % (
        'run', 'law', 'predicted', 'measured', 'rel.err', 'ok')
    for result in summary.get('results', []):
        label = result.get('label') or '-'
        if 'error' in result:
            lines.append('%-36s FAILED %s: %s' % (label, result['error'],
                                                  result.get('message')))
            continue
        run = result.get('run', {})
        lines.append('%-36s ledger %s  l2 %s -> %s' % (
            label, _fmt(run.get('ledger_residual')),
            _fmt(run.get('l2_initial')), _fmt(run.get('l2_terminal'))))
        for row in result.get('comparisons', []):
            if not row.get('applicable'):
                continue
            lines.append('%-36s %-30s %10s %10s %8s %6s' % (
                '', row['theorem'], _fmt(row.get('predicted')),
                _fmt(row.get('measured')), _fmt(row.get('relative_error')),
                _fmt(row.get('within_tolerance'))))
    for row in summary.get('convergence', []):
        lines.append('convergence %s p=%s a=%s ledger ratios %s' % (
            row['model'], _fmt(row['p']), _fmt(row['amplitude']),
            ', '.join(_fmt(r) for r in row['ledger_ratios'])))
    for row in summary.get('envelope_spread', []):
        lines.append('envelope %s p=%s %s spread %s' % (
            row['model'], _fmt(row['p']), row['theorem'],
            _fmt(row['spread'])))
    return '\n'.join([header, '-' * len(header)] + lines) + '\n'


def _safe(label):
    return ''.join(c if c.isalnum() or c in '-_.' else '_' for c in label)


def write_bundle(bundle, out):
    """Writes ``summary.json``, ``report.txt``, ``series/`` and ``fields/``.

    :return: The summary dictionary.
    """
    series_dir = os.path.join(out, 'series')
    fields_dir = os.path.join(out, 'fields')
    os.makedirs(series_dir, exist_ok=True)
    os.makedirs(fields_dir, exist_ok=True)
    for index, result in enumerate(bundle.get('results', [])):
        label = _safe(result.get('label') or 'run%d' % index)
        if result.get('series'):
            write_csv(os.path.join(series_dir, label + '.csv'),
                      RunRecord.COLUMNS, result['series'])
        if result.get('profile_rows'):
            write_csv(os.path.join(series_dir, label + '-profile.csv'),
                      ('t', 'xi', 'amp_pde', 'amp_ode', 'remainder_linf'),
                      result['profile_rows'])
        if result.get('cross_rows'):
            write_csv(os.path.join(series_dir, label + '-cross.csv'),
                      ('t', 'l2_discrepancy', 'linf_discrepancy'),
                      result['cross_rows'])
        if result.get('final_field') is not None:
            dump_field(result['final_field'],
                       os.path.join(fields_dir, label + '.bin'))
    summary = summarize(bundle)
    dump_json(summary, os.path.join(out, 'summary.json'))
    with open(os.path.join(out, 'report.txt'), 'w') as f:
        f.write(format_report(summary))
    log.info('Bundle written to %s', out)
    return summary
