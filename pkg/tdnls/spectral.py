# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Periodic grids, complex fields and the unitary operators acting on them.

The grid covers the box ``[-L, L)^n`` in reference coordinates. A positive
`scale` dilates it: physical coordinates are reference coordinates divided
by `scale`. The lens transform only touches this metadata, so it never
resamples a field and keeps discrete norms intact.

The discrete Fourier transform is normalized to approximate the unitary
continuous transform ``(2 pi)^(-n/2) \\int e^{-i x xi} f(x) dx``. It is
exactly unitary between the cell measures ``dx^n`` and ``dxi^n``, and the
Gaussian ``exp(-|x|^2/2)`` is its own transform up to grid tolerance.
"""

import logging
import math
import warnings

import numpy as np
from scipy import fft as sfft

from .constants import (
    ORIGINAL, LENS, TO_LENS, TO_ORIGINAL, MAX_POINTS_3D, MIN_POINTS, Y1_FLOOR,
)
from .exceptions import ChirpAliasing, GridMismatch, SingularY1

log = logging.getLogger(__name__)

__all__ = ['Grid', 'WaveState', 'ProfileState', 'dft', 'idft',
           'apply_multiplier', 'mdfm_apply', 'lens_transform', 'j_operator',
           'j_norm', 'j_power_norm', 'sobolev_seminorm', 'sobolev_norm',
           'weighted_sobolev_norm', 'interpolate', 'reflect']


class Grid(object):
    """Uniform periodic grid.

    :param n: Spatial dimension, 1 to 3.
    :type n: int

    :param points: Points per axis, a power of two not below 16.
    :type points: int

    :param L: Half width of the reference box.
    :type L: float

    :param scale: Dilation factor of the coordinates, 1 in the original frame.
    :type scale: float
    """
    def __init__(self, n, points, L, scale=1.0):
        n, points = int(n), int(points)
        if n not in (1, 2, 3):
            raise ValueError('Grid dimension should be 1, 2 or 3, got %r' % n)
        if points < MIN_POINTS or points & (points - 1):
            raise ValueError('Points per axis should be a power of two'
                             ' >= %d, got %r' % (MIN_POINTS, points))
        if n == 3 and points > MAX_POINTS_3D:
            raise ValueError('Three dimensional grids are limited to %d^3'
                             ' points' % MAX_POINTS_3D)
        if not L > 0 or not scale > 0:
            raise ValueError('Box half width and scale should be positive')
        self.n = n
        self.points = points
        self.L = float(L)
        self.scale = float(scale)

    def __repr__(self):
        return 'Grid(n=%d, points=%d, L=%r, scale=%r)' % (
            self.n, self.points, self.L, self.scale)

    def __eq__(self, other):
        return (isinstance(other, Grid) and self.n == other.n
                and self.points == other.points and self.L == other.L
                and self.scale == other.scale)

    def __ne__(self, other):
        return not (self == other)

    @property
    def shape(self):
        return (self.points,) * self.n

    @property
    def half_width(self):
        """Half width of the box in physical coordinates."""
        return self.L / self.scale

    @property
    def dx(self):
        return 2.0 * self.L / (self.points * self.scale)

    @property
    def dxi(self):
        return math.pi * self.scale / self.L

    @property
    def cell_volume(self):
        return self.dx ** self.n

    @property
    def dual_volume(self):
        return self.dxi ** self.n

    def rescaled(self, factor):
        """Returns the same grid with coordinates divided by `factor` more."""
        return Grid(self.n, self.points, self.L, self.scale * factor)

    def axis(self):
        """Physical coordinates along one axis."""
        return np.arange(self.points) * self.dx - self.half_width

    def frequency_axis(self):
        """Angular frequencies along one axis, in FFT order."""
        return 2.0 * np.pi * sfft.fftfreq(self.points, d=self.dx)

    def _broadcast(self, vector, axis):
        shape = [1] * self.n
        shape[axis] = self.points
        return vector.reshape(shape)

    def coordinates(self, axis=0):
        return self._broadcast(self.axis(), axis)

    def frequencies(self, axis=0):
        return self._broadcast(self.frequency_axis(), axis)

    def radius_sq(self):
        """``|x|^2`` broadcast to the grid shape."""
        x = self.axis() ** 2
        return sum(np.broadcast_to(self._broadcast(x, k), self.shape)
                   for k in range(self.n))

    def frequency_sq(self):
        """``|xi|^2`` broadcast to the grid shape, FFT order."""
        xi = self.frequency_axis() ** 2
        return sum(np.broadcast_to(self._broadcast(xi, k), self.shape)
                   for k in range(self.n))

    def dealias_mask(self):
        """Two-thirds rule mask in FFT order."""
        index = np.abs(sfft.fftfreq(self.points) * self.points)
        keep = index <= self.points // 3
        mask = np.ones(self.shape, dtype=bool)
        for k in range(self.n):
            mask = mask & self._broadcast(keep, k)
        return mask


class _Field(object):

    #: Name of the cell measure property of the grid.
    measure = 'cell_volume'

    def __init__(self, grid, values, t=0.0, frame=ORIGINAL, y1=None,
                 dy1=None):
        values = np.asarray(values, dtype=complex)
        if values.shape != grid.shape:
            raise GridMismatch('Values of shape %r do not fit %r'
                               % (values.shape, grid))
        if frame not in (ORIGINAL, LENS):
            raise ValueError('Unknown frame %r' % frame)
        self.grid = grid
        self.values = values
        self.t = float(t)
        self.frame = frame
        self.y1 = None if y1 is None else float(y1)
        self.dy1 = None if dy1 is None else float(dy1)

    def __repr__(self):
        return '%s(%r, t=%r, frame=%r)' % (self.__class__.__name__,
                                           self.grid, self.t, self.frame)

    @property
    def is_lens(self):
        return self.frame == LENS

    def replace(self, **kwargs):
        params = dict(grid=self.grid, values=self.values, t=self.t,
                      frame=self.frame, y1=self.y1, dy1=self.dy1)
        params.update(kwargs)
        return self.__class__(**params)

    def copy(self):
        return self.replace(values=self.values.copy())

    def lp_norm_p(self, q):
        """``||f||_q^q`` with the cell measure of the grid."""
        return float(np.sum(np.abs(self.values) ** q)
                     * getattr(self.grid, self.measure))

    def l2_norm(self):
        return math.sqrt(self.lp_norm_p(2))

    def l1_norm(self):
        return self.lp_norm_p(1)

    def linf_norm(self):
        return float(np.max(np.abs(self.values)))


class WaveState(_Field):
    """Complex field on a grid, in the original or in the lens frame.

    Lens frame states carry ``y1`` and ``dy1`` at their time ``t``; that is
    all :func:`lens_transform` needs to map them back.
    """

    def boundary_ratio(self):
        """Largest amplitude on the outermost cells relative to the peak."""
        peak = self.linf_norm()
        if peak == 0:
            return 0.0
        edge = 0.0
        amp = np.abs(self.values)
        for k in range(self.grid.n):
            first = np.take(amp, 0, axis=k)
            last = np.take(amp, -1, axis=k)
            edge = max(edge, float(first.max()), float(last.max()))
        return edge / peak


class ProfileState(_Field):
    """Complex field on the frequency side of a grid, FFT order."""
    measure = 'dual_volume'


def apply_multiplier(values, multiplier):
    """Applies a Fourier multiplier given in FFT order."""
    return sfft.ifftn(sfft.fftn(values) * multiplier)


def _phase_shift(grid):
    shift = np.ones(grid.shape, dtype=complex)
    for k in range(grid.n):
        shift = shift * np.exp(1j * grid.half_width * grid.frequencies(k))
    return shift


def dft(state):
    """Unitary discrete Fourier transform of a wave state.

    :param state: Field to transform.
    :type state: :class:`WaveState`

    :rtype: :class:`ProfileState`
    """
    grid = state.grid
    factor = (grid.dx / math.sqrt(2.0 * math.pi)) ** grid.n
    values = factor * _phase_shift(grid) * sfft.fftn(state.values)
    return ProfileState(grid, values, state.t, state.frame, state.y1,
                        state.dy1)


def idft(profile):
    """Inverse of :func:`dft`."""
    grid = profile.grid
    factor = (grid.dx / math.sqrt(2.0 * math.pi)) ** grid.n
    values = sfft.ifftn(profile.values * np.conj(_phase_shift(grid))) / factor
    return WaveState(grid, values, profile.t, profile.frame, profile.y1,
                     profile.dy1)


def _warn_aliasing(what, ratio):
    message = '%s chirp under-resolved: phase step %.3g > pi' % (what, ratio)
    log.warning(message)
    warnings.warn(message, ChirpAliasing, stacklevel=3)


def _axis_transform(values, matrix, axis):
    return np.moveaxis(np.tensordot(matrix, values, axes=([1], [axis])),
                       0, axis)


def _mdfm_factorized(state, s):
    grid = state.grid
    x = grid.axis()
    chirp = np.exp(1j * grid.radius_sq() / (2.0 * s))
    g = state.values * chirp
    matrix = (grid.dx / math.sqrt(2.0 * math.pi)) \
        * np.exp(-1j * np.outer(x / s, x))
    for k in range(grid.n):
        g = _axis_transform(g, matrix, k)
    return chirp * (1j * s) ** (-grid.n / 2.0) * g


def mdfm_apply(state, s, check=True):
    """Applies the free propagator ``exp(i s Laplacian / 2)``.

    The returned field comes from the Fourier multiplier
    ``exp(-i s |xi|^2 / 2)``. With `check` the same propagator is evaluated
    again through the chirp/dilation factorization ``M(s) D(s) F M(s)`` with
    ``M(s) = exp(i |x|^2 / (2 s))`` and ``D(s) g(x) = (i s)^(-n/2) g(x / s)``,
    and the relative L2 distance between both results is returned.

    :param state: Field to propagate.
    :type state: :class:`WaveState`

    :param s: Propagation time.
    :type s: float

    :return: Tuple of propagated state and discrepancy (``None`` without
             `check`).
    """
    if s == 0:
        return state.copy(), 0.0
    grid = state.grid
    values = apply_multiplier(state.values,
                              np.exp(-0.5j * s * grid.frequency_sq()))
    result = state.replace(values=values)
    if not check:
        return result, None
    ratio = grid.half_width * grid.dx / abs(s)
    if ratio > math.pi:
        _warn_aliasing('Factorized propagator', ratio)
    other = state.replace(values=_mdfm_factorized(state, s))
    norm = state.l2_norm()
    diff = result.replace(values=result.values - other.values).l2_norm()
    return result, diff / norm if norm > 0 else diff


def reflect(values):
    """Maps grid samples of ``f(x)`` to samples of ``f(-x)``."""
    for k in range(values.ndim):
        values = np.roll(np.flip(values, axis=k), 1, axis=k)
    return values


def _wrapped_chirp(coefficient, radius_sq):
    return np.exp(1j * np.remainder(coefficient * radius_sq, 2.0 * np.pi))


def lens_transform(state, pair=None, t=None, direction=TO_LENS,
                   floor=Y1_FLOOR):
    """Maps a field between the original frame and the lens frame.

    ``ToLens`` computes ``v(x) = exp(-i y1 y1' |x|^2 / 2) |y1|^(n/2) u(y1 x)``
    by a chirp, an amplitude factor and a rescale of the grid metadata
    (``scale <- scale |y1|``). ``ToOriginal`` inverts it with the ``y1``,
    ``dy1`` carried by the lens state, refreshed from `pair` when given.

    :param state: Field to transform.
    :type state: :class:`WaveState`

    :param pair: Fundamental solutions, required for ``ToLens``.
    :type pair: :class:`tdnls.oscillator.FundamentalPair`

    :param t: Evaluation time for ``ToLens``, the state time by default.
    :type t: float

    :param direction: :data:`~tdnls.constants.TO_LENS` or
                      :data:`~tdnls.constants.TO_ORIGINAL`.

    :raises: :exc:`~tdnls.exceptions.SingularY1` if ``|y1| < floor``.
    """
    n = state.grid.n
    if direction == TO_LENS:
        if state.frame != ORIGINAL:
            raise ValueError('State is already in the lens frame')
        t = state.t if t is None else float(t)
        y1, dy1 = float(pair.y1(t)), float(pair.dy1(t))
        if abs(y1) < floor:
            raise SingularY1('y1(%g) = %g is below the floor %g'
                             % (t, y1, floor))
        grid = state.grid.rescaled(abs(y1))
        ratio = abs(y1 * dy1) * grid.half_width * grid.dx
        if ratio > math.pi:
            _warn_aliasing('Lens', ratio)
        values = state.values if y1 > 0 else reflect(state.values)
        chirp = _wrapped_chirp(-0.5 * y1 * dy1, grid.radius_sq())
        values = abs(y1) ** (n / 2.0) * chirp * values
        return WaveState(grid, values, t, LENS, y1, dy1)
    elif direction == TO_ORIGINAL:
        if state.frame != LENS:
            raise ValueError('State is not in the lens frame')
        y1, dy1 = state.y1, state.dy1
        if pair is not None:
            y1, dy1 = float(pair.y1(state.t)), float(pair.dy1(state.t))
        if abs(y1) < floor:
            raise SingularY1('y1(%g) = %g is below the floor %g'
                             % (state.t, y1, floor))
        chirp = _wrapped_chirp(0.5 * y1 * dy1, state.grid.radius_sq())
        values = abs(y1) ** (-n / 2.0) * chirp * state.values
        if y1 < 0:
            values = reflect(values)
        grid = state.grid.rescaled(1.0 / abs(y1))
        return WaveState(grid, values, state.t, ORIGINAL)
    raise ValueError('Unknown direction %r' % direction)


def j_operator(state, derived, gamma=1.0, t=None, axis=0):
    """Applies the weighted operator ``J(t) = x + i Y(t) grad``.

    With ``gamma == 1`` the `axis` component ``x_k f + i Y d_k f`` is
    returned, the derivative taken by the Fourier multiplier ``i xi_k``.
    With ``0 < gamma < 1`` the fractional power
    ``M(Y) |Y|^gamma |D|^gamma M(Y)^-1 f`` is returned, where
    ``M(Y) = exp(i |x|^2 / (2 Y))`` and ``|D|^gamma`` is the ``|xi|^gamma``
    multiplier; it reduces to ``|x|^gamma f`` when ``Y = 0``.

    :param derived: Provides ``Y(t)``; a plain number is taken as ``Y``.
    :type derived: :class:`tdnls.oscillator.OscillatorDerived`
    """
    if not 0 < gamma <= 1:
        raise ValueError('gamma should lie in (0, 1], got %r' % gamma)
    t = state.t if t is None else t
    Y = float(derived.Y(t)) if hasattr(derived, 'Y') else float(derived)
    grid = state.grid
    if gamma == 1:
        derivative = apply_multiplier(state.values,
                                      1j * grid.frequencies(axis))
        values = grid.coordinates(axis) * state.values + 1j * Y * derivative
        return state.replace(values=values)
    if Y == 0:
        return state.replace(values=np.sqrt(grid.radius_sq()) ** gamma
                             * state.values)
    ratio = grid.half_width * grid.dx / abs(Y)
    if ratio > math.pi:
        _warn_aliasing('Fractional J', ratio)
    chirp = np.exp(1j * grid.radius_sq() / (2.0 * Y))
    inner = apply_multiplier(np.conj(chirp) * state.values,
                             (abs(Y) * np.sqrt(grid.frequency_sq())) ** gamma)
    return state.replace(values=chirp * inner)


def j_norm(state, derived, gamma=1.0, t=None):
    """L2 norm of ``J f`` (all components) or of ``|J|^gamma f``."""
    if gamma == 1:
        total = sum(j_operator(state, derived, 1.0, t, k).lp_norm_p(2)
                    for k in range(state.grid.n))
        return math.sqrt(total)
    return j_operator(state, derived, gamma, t).l2_norm()


def j_power_norm(state, Y, order):
    """``|| |J|^order f ||_2`` for any order >= 0, free of chirp aliasing.

    Uses ``|J|^s = exp(i Y Laplacian / 2) |x|^s exp(-i Y Laplacian / 2)``
    and unitarity of the outer propagator.
    """
    grid = state.grid
    pulled = apply_multiplier(state.values,
                              np.exp(0.5j * Y * grid.frequency_sq()))
    weight = grid.radius_sq() ** (0.5 * order)
    return state.replace(values=weight * pulled).l2_norm()


def sobolev_seminorm(state, order):
    """Homogeneous Sobolev seminorm ``|| |xi|^order f^ ||_2``."""
    if order < 0:
        raise ValueError('Order should be non-negative, got %r' % order)
    profile = dft(state)
    weight = profile.grid.frequency_sq() ** order
    return math.sqrt(float(np.sum(weight * np.abs(profile.values) ** 2))
                     * profile.grid.dual_volume)


def sobolev_norm(state, order):
    """Inhomogeneous Sobolev norm ``|| <xi>^order f^ ||_2``."""
    profile = dft(state)
    weight = (1.0 + profile.grid.frequency_sq()) ** order
    return math.sqrt(float(np.sum(weight * np.abs(profile.values) ** 2))
                     * profile.grid.dual_volume)


def weighted_sobolev_norm(state, order):
    """``H^{s,s}`` norm: ``||<xi>^s f^||_2 + ||<x>^s f||_2``."""
    weight = (1.0 + state.grid.radius_sq()) ** (0.5 * order)
    return sobolev_norm(state, order) \
        + state.replace(values=weight * state.values).l2_norm()


def _interpolation_matrix(source, target):
    x0 = -source.half_width
    xi = source.frequency_axis()
    x = target.axis()
    offset = x - x0
    matrix = np.exp(1j * np.outer(offset, xi)) / source.points
    nyquist = source.points // 2
    matrix[:, nyquist] = np.cos(xi[nyquist] * offset) / source.points
    outside = (x < x0) | (x >= source.half_width)
    matrix[outside, :] = 0.0
    return matrix


def interpolate(state, target):
    """Band-limited interpolation of a field onto another grid.

    Evaluates the trigonometric interpolant of `state` at the physical
    points of `target`; points outside of the source box get zero.

    :raises: :exc:`~tdnls.exceptions.GridMismatch` on different dimensions.
    """
    if target.n != state.grid.n:
        raise GridMismatch('Cannot interpolate %r onto %r'
                           % (state.grid, target))
    coefficients = sfft.fftn(state.values)
    matrix = _interpolation_matrix(state.grid, target)
    for k in range(target.n):
        coefficients = _axis_transform(coefficients, matrix, k)
    return WaveState(target, coefficients, state.t, state.frame, state.y1,
                     state.dy1)
