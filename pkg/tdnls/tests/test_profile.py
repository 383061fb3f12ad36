# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import math
import unittest

import numpy as np

from tdnls.constants import LENS, ORIGINAL, ZERO
from tdnls.criticality import Nonlinearity
from tdnls.exceptions import GridMismatch
from tdnls.oscillator import OscillatorModel, build_derived, solve_fundamental
from tdnls.profile import (
    ProfileTrack, amplitude_ode, compare_pde_vs_ode, comparison_rows,
    extract_profile, frequency_of, remainder, select_frequencies,
    track_profile,
)
from tdnls.solver import evolve
from tdnls.spectral import Grid, ProfileState, dft
from tdnls.tests.utils import gaussian, small_config


class AmplitudeLawTestCase(unittest.TestCase):

    def setUp(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        self.derived = build_derived(pair, 1, 3.0, 1.0)
        self.grid = Grid(1, 16, 4.0)
        self.profile = ProfileState(self.grid, np.full(self.grid.shape, 0.5),
                                    1.0)

    def test_closed_form(self):
        law = amplitude_ode(self.profile, self.derived, Nonlinearity(3),
                            [1.0, math.e], {'zero': 0})
        np.testing.assert_allclose(law['zero'], [0.5, 0.5 / math.sqrt(1.5)],
                                   rtol=1e-7)

    def test_whole_grid(self):
        law = amplitude_ode(self.profile, self.derived, Nonlinearity(3),
                            [1.0, 2.0, 3.0])
        self.assertEqual(law.shape, (3, 16))
        self.assertTrue(np.all(np.diff(law[:, 0]) < 0))

    def test_without_dissipation(self):
        law = amplitude_ode(self.profile, self.derived,
                            Nonlinearity(3, 1.0, 0.0), [1.0, 5.0],
                            {'zero': 0, 'peak': 3})
        np.testing.assert_array_equal(law['peak'], [0.5, 0.5])


class FrequencyTestCase(unittest.TestCase):

    def test_gaussian_profile(self):
        grid = Grid(1, 128, 16.0)
        chosen = select_frequencies(dft(gaussian(grid)))
        self.assertEqual(chosen['zero'], 0)
        self.assertEqual(chosen['peak'], 0)
        xi = frequency_of(grid, chosen['half_power'])
        self.assertAlmostEqual(abs(xi[0]), math.sqrt(math.log(2.0)),
                               delta=grid.dxi)

    def test_empty_profile(self):
        grid = Grid(2, 16, 4.0)
        chosen = select_frequencies(ProfileState(grid, np.zeros(grid.shape)))
        self.assertEqual(set(chosen.values()), set([0]))

    def test_frequency_vector(self):
        grid = Grid(2, 16, 4.0)
        self.assertEqual(frequency_of(grid, 17), [grid.dxi, grid.dxi])


class TrackTestCase(unittest.TestCase):

    def test_linear_profile_is_frozen(self):
        nl = Nonlinearity(3, 0.0, 0.0)
        config = small_config(nl=nl, snapshot_every=1)
        record = evolve(config)
        track = track_profile(record, config.derived(), nl)
        self.assertEqual(len(track), 11)
        self.assertFalse(any(track.dominant))
        self.assertEqual(max(track.remainder_linf), 0.0)
        histories = amplitude_ode(track.snapshots[0], config.derived(), nl,
                                  track.times, track.indices)
        result = compare_pde_vs_ode(track, histories)
        self.assertLess(result.max_discrepancy, 1e-10)
        self.assertEqual(result.window_start, 1.0)
        self.assertFalse(result.top_term_dominant)

    def test_original_frame_snapshots(self):
        nl = Nonlinearity(3, 0.0, 0.0)
        config = small_config(nl=nl, frame=ORIGINAL, snapshot_every=5)
        track = track_profile(evolve(config).snapshots, config.derived(), nl)
        first = np.abs(track.snapshots[0].values)
        last = np.abs(track.snapshots[-1].values)
        np.testing.assert_allclose(last, first, atol=1e-10)

    def test_dissipative_track(self):
        nl = Nonlinearity(3)
        config = small_config(snapshot_every=1)
        track = track_profile(evolve(config), config.derived(), nl)
        amplitudes = track.amplitudes['zero']
        self.assertLess(amplitudes[-1], amplitudes[0])
        self.assertGreater(max(track.remainder_linf), 0.0)
        histories = amplitude_ode(track.snapshots[0], config.derived(), nl,
                                  track.times, track.indices)
        rows = comparison_rows(track, histories)
        self.assertEqual(len(rows), len(track.indices) * len(track))
        self.assertEqual(len(rows[0]), 5)
        result = compare_pde_vs_ode(track, histories)
        self.assertEqual(set(result.discrepancy), set(track.indices))
        self.assertGreater(result.remainder_budget, 0.0)

    def test_no_snapshots(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        derived = build_derived(pair, 1, 3.0, 1.0)
        self.assertRaises(ValueError, track_profile, [], derived,
                          Nonlinearity(3))


class CompareTestCase(unittest.TestCase):

    def setUp(self):
        self.grid = Grid(1, 16, 4.0)
        self.track = ProfileTrack(self.grid, {'zero': 0})
        profile = ProfileState(self.grid, np.ones(self.grid.shape), 1.0)
        self.track.add(1.0, profile, 0.0, 0.0, False)
        self.track.add(2.0, profile, 0.0, 0.0, True)

    def test_window_opens_at_dominance(self):
        result = compare_pde_vs_ode(self.track, {'zero': [0.0, 0.75]})
        self.assertEqual(result.window_start, 2.0)
        self.assertEqual(result.max_discrepancy, 0.25)

    def test_selection_mismatch(self):
        self.assertRaises(GridMismatch, compare_pde_vs_ode, self.track,
                          {'peak': [1.0, 1.0]})

    def test_length_mismatch(self):
        self.assertRaises(GridMismatch, compare_pde_vs_ode, self.track,
                          {'zero': [1.0]})

    def test_grid_mismatch(self):
        other = ProfileState(Grid(1, 32, 4.0), np.ones(32), 3.0)
        self.assertRaises(GridMismatch, self.track.add, 3.0, other, 0.0, 0.0,
                          False)


class RemainderTestCase(unittest.TestCase):

    def test_scales_with_lambda(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        derived = build_derived(pair, 1, 3.0, 1.0)
        state = gaussian(Grid(1, 64, 8.0), 2.0).replace(
            frame=LENS, y1=1.0, dy1=0.0)
        first, linf1, l2_1 = remainder(state, Nonlinearity(3), derived)
        second, linf2, _ = remainder(state, Nonlinearity(3, 0.0, -2.0),
                                     derived)
        self.assertAlmostEqual(linf2, 2.0 * linf1)
        np.testing.assert_allclose(second.values, 2.0 * first.values)
        self.assertEqual(first.grid, extract_profile(state, derived).grid)
        self.assertGreater(l2_1, 0.0)


if __name__ == '__main__':
    unittest.main()
