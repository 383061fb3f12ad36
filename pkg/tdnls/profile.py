# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Fourier profile of lens frame fields and its amplitude law.

The profile ``v~(t) = F[U_Y(t)^-1 v(t)]`` removes the free dispersion from
the lens field. Dropping the remainder, its modulus obeys the pointwise law
``d|v~|^2 / dt = 2 Im lambda |y2|^(-n (p-1) / 2) |v~|^(p+1)``, solved by
``|v~(t)| = |v~0| (1 + (p-1) |Im lambda| |v~0|^(p-1) Y2(t))^(-1/(p-1))``.
"""

import logging

import numpy as np

from .constants import DOMINANCE_FACTOR
from .exceptions import GridMismatch
from .records import ProfileComparison
from .spectral import apply_multiplier, dft, lens_transform

log = logging.getLogger(__name__)

__all__ = ['ProfileTrack', 'extract_profile', 'remainder',
           'select_frequencies', 'amplitude_ode', 'track_profile',
           'compare_pde_vs_ode', 'comparison_rows', 'frequency_of']


def _pull_back(values, grid, Y):
    return apply_multiplier(values, np.exp(1j * Y * grid.frequency_sq()))


def extract_profile(state, derived):
    """Applies ``U_Y(t)^-1`` and the unitary DFT to a lens frame field.

    :param state: Lens frame field.
    :type state: :class:`~tdnls.spectral.WaveState`

    :rtype: :class:`~tdnls.spectral.ProfileState`
    """
    Y = float(derived.Y(state.t))
    return dft(state.replace(values=_pull_back(state.values, state.grid, Y)))


def remainder(state, nl, derived, pair=None):
    """Remainder of the profile equation after the top term is split off.

    ``R = lambda |y1|^-a F[U_Y^-1 (|v|^(p-1) v)] - lambda |y2|^-a |v~|^(p-1) v~``
    with ``a = n (p - 1) / 2``.

    :return: Tuple of the remainder profile, its sup norm and its L2 norm.
    """
    pair = pair or derived.pair
    grid, p = state.grid, nl.p
    a = grid.n * (p - 1.0) / 2.0
    y1, _, y2, _ = pair(state.t)
    Y = float(derived.Y(state.t))
    lam = nl.lam
    source = np.abs(state.values) ** (p - 1.0) * state.values
    first = dft(state.replace(values=_pull_back(source, grid, Y)))
    profile = extract_profile(state, derived)
    top = np.abs(profile.values) ** (p - 1.0) * profile.values
    values = lam * abs(float(y1)) ** (-a) * first.values \
        - lam * abs(float(y2)) ** (-a) * top
    field = profile.replace(values=values)
    return field, field.linf_norm(), field.l2_norm()


def select_frequencies(profile):
    """Picks ``zero``, ``peak`` and ``half_power`` frequencies of a profile.

    :return: dict of name to flat index in FFT order.
    """
    amp = np.abs(profile.values).ravel()
    peak = int(np.argmax(amp))
    if amp[peak] == 0:
        return {'zero': 0, 'peak': 0, 'half_power': 0}
    level = np.abs(amp ** 2 - 0.5 * amp[peak] ** 2)
    return {'zero': 0, 'peak': peak, 'half_power': int(np.argmin(level))}


def frequency_of(grid, index):
    """Frequency vector of a flat FFT order index."""
    where = np.unravel_index(index, grid.shape)
    axis = grid.frequency_axis()
    return [float(axis[i]) for i in where]


def amplitude_ode(initial_profile, derived, nl, t_grid, indices=None):
    """Amplitude law integrated in closed form from the initial profile.

    :param initial_profile: Profile at the start time of the law.
    :type initial_profile: :class:`~tdnls.spectral.ProfileState`

    :param t_grid: Times at which amplitudes are wanted.

    :param indices: dict of name to flat index; the whole grid when omitted.

    :return: dict of name to amplitude history, or an array of shape
             ``(len(t_grid),) + grid.shape`` without `indices`.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    p, g = nl.p, nl.dissipation
    elapsed = derived.Y2(t_grid) - derived.Y2(initial_profile.t)
    elapsed = np.atleast_1d(elapsed)
    amp0 = np.abs(initial_profile.values)

    def law(rho0):
        rho0 = np.asarray(rho0, dtype=float)
        if g == 0:
            return np.broadcast_to(rho0, elapsed.shape + rho0.shape).copy()
        shape = (-1,) + (1,) * rho0.ndim
        factor = 1.0 + (p - 1.0) * g * rho0 ** (p - 1.0) \
            * elapsed.reshape(shape)
        return rho0 * factor ** (-1.0 / (p - 1.0))

    if indices is None:
        return law(amp0)
    flat = amp0.ravel()
    return dict((name, law(flat[index])) for name, index in indices.items())


class ProfileTrack(object):
    """Profiles, selected amplitudes and remainder norms over time."""

    def __init__(self, grid, indices):
        self.grid = grid
        self.indices = dict(indices)
        self.times = []
        self.snapshots = []
        self.amplitudes = dict((name, []) for name in self.indices)
        self.remainder_linf = []
        self.remainder_l2 = []
        self.dominant = []

    def __repr__(self):
        return 'ProfileTrack(%r, points=%d)' % (self.grid, len(self.times))

    def __len__(self):
        return len(self.times)

    def frequencies(self):
        return dict((name, frequency_of(self.grid, index))
                    for name, index in self.indices.items())

    def add(self, t, profile, linf, l2, dominant):
        if profile.grid != self.grid:
            raise GridMismatch('Profile grid %r differs from %r'
                               % (profile.grid, self.grid))
        flat = np.abs(profile.values).ravel()
        self.times.append(float(t))
        self.snapshots.append(profile)
        for name, index in self.indices.items():
            self.amplitudes[name].append(float(flat[index]))
        self.remainder_linf.append(float(linf))
        self.remainder_l2.append(float(l2))
        self.dominant.append(bool(dominant))


def track_profile(snapshots, derived, nl, indices=None,
                  dominance=DOMINANCE_FACTOR):
    """Builds a :class:`ProfileTrack` from lens frame snapshots.

    Original frame snapshots are mapped to the lens frame first; all of them
    must then share one grid. A time counts as top term dominated when
    ``||R||_inf < dominance |Im lambda| |y2|^-a ||v~||_inf^p``.

    :param snapshots: Field snapshots, or a run record holding them.
    :param indices: Frequencies to follow; :func:`select_frequencies` of the
                    first profile by default.
    """
    snapshots = getattr(snapshots, 'snapshots', snapshots)
    if not snapshots:
        raise ValueError('No snapshots to track')
    pair = derived.pair
    a = derived.weight_exponent
    track = None
    for state in snapshots:
        if not state.is_lens:
            state = lens_transform(state, pair, state.t)
        profile = extract_profile(state, derived)
        if track is None:
            track = ProfileTrack(profile.grid,
                                 indices or select_frequencies(profile))
        _, linf, l2 = remainder(state, nl, derived, pair)
        top = nl.dissipation * abs(float(pair.y2(state.t))) ** (-a) \
            * profile.linf_norm() ** nl.p
        track.add(state.t, profile, linf, l2, linf < dominance * top)
    log.info('Tracked %d profiles, %d top term dominated', len(track),
             sum(track.dominant))
    return track


def _trapezoid(y, t):
    y, t = np.asarray(y, dtype=float), np.asarray(t, dtype=float)
    if t.size < 2:
        return 0.0
    return float(np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(t)))


def compare_pde_vs_ode(track, ode_histories):
    """Sup discrepancy between tracked amplitudes and the amplitude law.

    The comparison window opens at the first top term dominated time, or
    covers the whole track if there is none. The remainder budget
    ``\\int ||R||_inf`` is accumulated over the whole track.

    :param ode_histories: dict of name to amplitudes at ``track.times``.

    :rtype: :class:`~tdnls.records.ProfileComparison`

    :raises: :exc:`~tdnls.exceptions.GridMismatch` on different frequency
             selections or time grids.
    """
    if set(ode_histories) != set(track.indices):
        raise GridMismatch('Frequency selections %s and %s differ'
                           % (sorted(ode_histories), sorted(track.indices)))
    times = np.asarray(track.times)
    start = track.dominant.index(True) if any(track.dominant) else 0
    discrepancy = {}
    for name, history in ode_histories.items():
        history = np.asarray(history, dtype=float)
        if history.shape != times.shape:
            raise GridMismatch('History %r has %d points, track has %d'
                               % (name, history.size, times.size))
        pde = np.asarray(track.amplitudes[name])
        discrepancy[name] = float(np.max(np.abs(pde[start:]
                                                - history[start:])))
    return ProfileComparison(
        frequencies=track.frequencies(), discrepancy=discrepancy,
        max_discrepancy=max(discrepancy.values()) if discrepancy else 0.0,
        remainder_budget=_trapezoid(track.remainder_linf, times),
        window_start=float(times[start]),
        top_term_dominant=any(track.dominant))


def comparison_rows(track, ode_histories):
    """Rows ``(t, xi, amp_pde, amp_ode, remainder_linf)`` for the CSV series.

    ``xi`` is the length of the tracked frequency vector.
    """
    frequencies = track.frequencies()
    rows = []
    for name in sorted(track.indices):
        xi = float(np.sqrt(np.sum(np.square(frequencies[name]))))
        for k, t in enumerate(track.times):
            rows.append((t, xi, track.amplitudes[name][k],
                         float(ode_histories[name][k]),
                         track.remainder_linf[k]))
    return rows
