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
import warnings

import numpy as np

from tdnls.constants import CONSTANT, LENS, ORIGINAL, TO_LENS, TO_ORIGINAL
from tdnls.exceptions import ChirpAliasing, GridMismatch
from tdnls.oscillator import OscillatorModel, solve_fundamental
from tdnls.spectral import (
    Grid, WaveState, dft, idft, interpolate, j_power_norm, lens_transform,
    mdfm_apply, reflect, sobolev_seminorm, weighted_sobolev_norm,
)
from tdnls.tests.utils import free_gaussian, gaussian


class GridTestCase(unittest.TestCase):

    def test_validation(self):
        self.assertRaises(ValueError, Grid, 1, 100, 8.0)
        self.assertRaises(ValueError, Grid, 1, 8, 8.0)
        self.assertRaises(ValueError, Grid, 4, 16, 8.0)
        self.assertRaises(ValueError, Grid, 3, 256, 8.0)
        self.assertRaises(ValueError, Grid, 1, 16, 0.0)

    def test_spacing(self):
        grid = Grid(2, 64, 8.0, 2.0)
        self.assertEqual(grid.shape, (64, 64))
        self.assertEqual(grid.half_width, 4.0)
        self.assertEqual(grid.dx, 0.125)
        self.assertAlmostEqual(grid.dxi, math.pi / 4.0)
        self.assertEqual(grid.axis()[0], -4.0)
        self.assertEqual(grid.rescaled(2.0).half_width, 2.0)

    def test_equality(self):
        self.assertEqual(Grid(1, 16, 4.0), Grid(1, 16, 4.0))
        self.assertNotEqual(Grid(1, 16, 4.0), Grid(1, 16, 4.0, 1.5))

    def test_dealias_mask(self):
        self.assertEqual(int(Grid(1, 16, 4.0).dealias_mask().sum()), 11)
        self.assertEqual(int(Grid(2, 16, 4.0).dealias_mask().sum()), 121)

    def test_state_shape(self):
        self.assertRaises(GridMismatch, WaveState, Grid(1, 16, 4.0),
                          np.zeros(10))


class TransformTestCase(unittest.TestCase):

    def setUp(self):
        self.grid = Grid(1, 128, 16.0)

    def test_gaussian_is_fixed(self):
        profile = dft(gaussian(self.grid))
        expected = np.exp(-self.grid.frequency_sq() / 2.0)
        np.testing.assert_allclose(profile.values, expected, atol=1e-12)

    def test_plancherel(self):
        u = gaussian(Grid(2, 64, 8.0))
        u = u.replace(values=u.values * np.exp(1j * u.grid.coordinates(0)))
        self.assertAlmostEqual(dft(u).l2_norm(), u.l2_norm(), places=12)

    def test_inverse(self):
        u = free_gaussian(self.grid, 0.5)
        np.testing.assert_allclose(idft(dft(u)).values, u.values, atol=1e-13)

    def test_reflect(self):
        x = self.grid.axis()
        np.testing.assert_allclose(reflect(x)[1:], -x[1:])


class PropagatorTestCase(unittest.TestCase):

    def test_free_gaussian(self):
        grid = Grid(1, 512, 32.0)
        state, discrepancy = mdfm_apply(gaussian(grid), 1.0, check=False)
        self.assertIsNone(discrepancy)
        np.testing.assert_allclose(state.values,
                                   free_gaussian(grid, 1.0).values,
                                   atol=1e-10)

    def test_two_dimensions(self):
        grid = Grid(2, 128, 16.0)
        state, _ = mdfm_apply(gaussian(grid), 0.5, check=False)
        np.testing.assert_allclose(state.values,
                                   free_gaussian(grid, 0.5).values,
                                   atol=1e-10)

    def test_factorization_agrees(self):
        grid = Grid(1, 512, 12.0)
        _, discrepancy = mdfm_apply(gaussian(grid), 1.0)
        self.assertLess(discrepancy, 1e-8)

    def test_zero_time(self):
        u = gaussian(Grid(1, 64, 8.0))
        state, discrepancy = mdfm_apply(u, 0.0)
        self.assertEqual(discrepancy, 0.0)
        np.testing.assert_array_equal(state.values, u.values)

    def test_aliasing_warning(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            mdfm_apply(gaussian(Grid(1, 64, 8.0)), 0.01)
        self.assertTrue(any(issubclass(w.category, ChirpAliasing)
                            for w in caught))


class LensTestCase(unittest.TestCase):

    def setUp(self):
        model = OscillatorModel(CONSTANT, omega2=1.0)
        self.pair = solve_fundamental(model, 3.0)
        self.grid = Grid(1, 256, 16.0)

    def check_round_trip(self, t):
        u = free_gaussian(self.grid, 0.3).replace(t=t)
        lens = lens_transform(u, self.pair)
        self.assertEqual(lens.frame, LENS)
        self.assertAlmostEqual(lens.y1, math.cos(t))
        self.assertAlmostEqual(lens.grid.scale, abs(math.cos(t)))
        self.assertAlmostEqual(lens.l2_norm(), u.l2_norm(), places=12)
        back = lens_transform(lens, direction=TO_ORIGINAL)
        self.assertEqual(back.frame, ORIGINAL)
        self.assertAlmostEqual(back.grid.scale, 1.0, places=12)
        np.testing.assert_allclose(back.values, u.values, atol=1e-12)

    def test_round_trip(self):
        self.check_round_trip(0.5)

    def test_round_trip_negative_y1(self):
        self.check_round_trip(2.0)

    def test_lens_values(self):
        t = 0.5
        y1, dy1 = math.cos(t), -math.sin(t)
        lens = lens_transform(gaussian(self.grid, t), self.pair, t,
                              direction=TO_LENS)
        x = lens.grid.axis()
        expected = math.sqrt(y1) * np.exp(-0.5j * y1 * dy1 * x ** 2) \
            * np.exp(-(y1 * x) ** 2 / 2.0)
        np.testing.assert_allclose(lens.values, expected, atol=1e-12)

    def test_wrong_frame(self):
        u = gaussian(self.grid)
        self.assertRaises(ValueError, lens_transform, u,
                          direction=TO_ORIGINAL)
        lens = lens_transform(u, self.pair, 0.5)
        self.assertRaises(ValueError, lens_transform, lens, self.pair)


class NormsTestCase(unittest.TestCase):

    def test_weighted_norm_of_free_evolution(self):
        grid = Grid(1, 512, 32.0)
        value = j_power_norm(free_gaussian(grid, 2.0), 2.0, 1)
        self.assertAlmostEqual(value, math.sqrt(math.sqrt(math.pi) / 2.0),
                               places=8)

    def test_sobolev_seminorm(self):
        u = gaussian(Grid(1, 128, 16.0))
        self.assertAlmostEqual(sobolev_seminorm(u, 1),
                               math.sqrt(math.sqrt(math.pi) / 2.0), places=10)
        self.assertAlmostEqual(sobolev_seminorm(u, 0), u.l2_norm(),
                               places=12)
        self.assertRaises(ValueError, sobolev_seminorm, u, -1)

    def test_weighted_sobolev_order_zero(self):
        u = gaussian(Grid(1, 128, 16.0))
        self.assertAlmostEqual(weighted_sobolev_norm(u, 0), 2 * u.l2_norm(),
                               places=12)

    def test_gaussian_norms(self):
        u = gaussian(Grid(1, 128, 16.0))
        self.assertAlmostEqual(u.l2_norm() ** 2, math.sqrt(math.pi),
                               places=12)
        self.assertEqual(u.linf_norm(), 1.0)
        self.assertLess(u.boundary_ratio(), 1e-50)


class InterpolateTestCase(unittest.TestCase):

    def test_identity(self):
        u = free_gaussian(Grid(1, 64, 8.0), 0.5)
        np.testing.assert_allclose(interpolate(u, u.grid).values, u.values,
                                   atol=1e-12)

    def test_finer_grid(self):
        u = gaussian(Grid(2, 64, 8.0))
        target = Grid(2, 128, 8.0)
        np.testing.assert_allclose(interpolate(u, target).values,
                                   gaussian(target).values, atol=1e-8)

    def test_outside_is_zero(self):
        u = gaussian(Grid(1, 64, 4.0))
        v = interpolate(u, Grid(1, 64, 8.0))
        self.assertEqual(v.values[0], 0.0)

    def test_dimension_mismatch(self):
        u = gaussian(Grid(1, 64, 8.0))
        self.assertRaises(GridMismatch, interpolate, u, Grid(2, 64, 8.0))


if __name__ == '__main__':
    unittest.main()
