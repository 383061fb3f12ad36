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
from scipy.integrate import quad

from tdnls.constants import (
    CLOSED_FORM, NUMERIC_ODE, ZERO, CONSTANT, INVERSE_SQUARE_ATTRACTIVE,
    INVERSE_SQUARE_REPULSIVE, SUB_QUADRATIC, TABULATED, GLUE_CONSTANT,
)
from tdnls.exceptions import DomainError, InsufficientRange, SingularY1
from tdnls.oscillator import (
    OscillatorModel, build_derived, check_conditions, solve_fundamental,
)
from tdnls.tests.utils import long_test


class OscillatorModelTestCase(unittest.TestCase):

    def test_unknown_kind(self):
        self.assertRaises(DomainError, OscillatorModel, kind='quartic')

    def test_attractive_strength_range(self):
        self.assertRaises(DomainError, OscillatorModel,
                          kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=0.25)
        self.assertRaises(DomainError, OscillatorModel,
                          kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=-0.1)

    def test_sub_quadratic_decay(self):
        self.assertRaises(DomainError, OscillatorModel, kind=SUB_QUADRATIC,
                          decay=2.0)

    def test_tabulated_knots(self):
        self.assertRaises(DomainError, OscillatorModel, kind=TABULATED,
                          knots=[0.0, 1.0], values=[1.0])
        self.assertRaises(DomainError, OscillatorModel, kind=TABULATED,
                          knots=[0.0, 0.0], values=[1.0, 2.0])

    def test_exponents(self):
        model = OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=0.1875)
        self.assertEqual(model.exponents, (0.25, 0.75))
        self.assertEqual(model.y2_exponent, 0.75)
        model = OscillatorModel(kind=INVERSE_SQUARE_REPULSIVE, rho=2.0)
        self.assertEqual(model.exponents, (-1.0, 2.0))

    def test_sigma_tail_and_glue(self):
        model = OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=0.1875,
                                t_start=1.0, glue=GLUE_CONSTANT)
        self.assertEqual(float(model.sigma(0.5)), 0.1875)
        self.assertEqual(float(model.sigma(2.0)), 0.1875 / 4.0)
        matched = OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE,
                                  sigma0=0.1875, t_start=1.0)
        kappa = math.sqrt(-matched.glue_sigma)
        self.assertAlmostEqual(kappa * math.tanh(kappa), 0.25, places=12)

    def test_tabulated_range(self):
        model = OscillatorModel(kind=TABULATED, knots=[0.0, 5.0],
                                values=[0.0, 0.0])
        self.assertRaises(DomainError, model.check_range, 10.0)
        self.assertRaises(DomainError, model.sigma, 6.0)


class FundamentalPairTestCase(unittest.TestCase):

    def test_zero(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        self.assertEqual(pair.method, CLOSED_FORM)
        y1, dy1, y2, dy2 = pair(2.0)
        self.assertEqual((float(y1), float(dy1), float(y2), float(dy2)),
                         (1.0, 0.0, 2.0, 1.0))

    def test_constant(self):
        pair = solve_fundamental(OscillatorModel(CONSTANT, omega2=4.0), 3.0)
        t = np.linspace(0.0, 3.0, 7)
        np.testing.assert_allclose(pair.y1(t), np.cos(2.0 * t), atol=1e-14)
        np.testing.assert_allclose(pair.y2(t), np.sin(2.0 * t) / 2.0,
                                   atol=1e-14)

    def test_outside_horizon(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        self.assertRaises(DomainError, pair, 10.5)
        self.assertRaises(DomainError, pair.y1, -1.0)

    def test_matched_glue_is_pure_power(self):
        model = OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=0.1875,
                                t_start=1.0)
        pair = solve_fundamental(model, 100.0)
        ratio = pair.y1(16.0) / pair.y1(1.0)
        self.assertAlmostEqual(float(ratio), 2.0, places=10)

    def test_closed_form_matches_numeric(self):
        for model in [OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE,
                                      sigma0=0.1875, t_start=1.0),
                      OscillatorModel(kind=INVERSE_SQUARE_REPULSIVE, rho=2.0,
                                      t_start=1.0, glue=GLUE_CONSTANT)]:
            closed = solve_fundamental(model, 20.0, method=CLOSED_FORM)
            numeric = solve_fundamental(model, 20.0, method=NUMERIC_ODE)
            t = np.linspace(0.0, 20.0, 41)
            for a, b in zip(closed(t), numeric(t)):
                np.testing.assert_allclose(a, b, rtol=1e-6, atol=1e-8)

    def test_wronskian(self):
        model = OscillatorModel(kind=SUB_QUADRATIC, strength=1.0, decay=3.0)
        pair = solve_fundamental(model, 50.0)
        self.assertEqual(pair.method, NUMERIC_ODE)
        self.assertLess(pair.wronskian_error(np.linspace(0, 50, 101)), 1e-8)

    @long_test
    def test_wronskian_every_kind(self):
        models = [OscillatorModel(ZERO),
                  OscillatorModel(CONSTANT, omega2=1.0),
                  OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE,
                                  sigma0=0.1875),
                  OscillatorModel(kind=INVERSE_SQUARE_REPULSIVE, rho=2.0),
                  OscillatorModel(kind=SUB_QUADRATIC, strength=1.0, decay=3.0),
                  OscillatorModel(kind=TABULATED, knots=[0.0, 10.0, 100.0],
                                  values=[0.5, 0.0, 0.0])]
        t = np.linspace(0.0, 100.0, 2001)
        for model in models:
            pair = solve_fundamental(model, 100.0)
            self.assertLessEqual(pair.wronskian_error(t), 1e-8, model.kind)

    def test_callable_sigma(self):
        model = OscillatorModel(kind=SUB_QUADRATIC,
                                sigma_fn=lambda t: 0.5 / (1.0 + t) ** 4)
        pair = solve_fundamental(model, 10.0)
        self.assertLess(pair.wronskian_error(np.linspace(0, 10, 11)), 1e-8)

    def test_tabulated_zero_is_free(self):
        model = OscillatorModel(kind=TABULATED, knots=[0.0, 10.0],
                                values=[0.0, 0.0])
        pair = solve_fundamental(model, 10.0)
        np.testing.assert_allclose(pair.y2([1.0, 5.0]), [1.0, 5.0],
                                   rtol=1e-9)

    def test_samples(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 4.0)
        rows = pair.samples([0.0, 4.0])
        self.assertEqual(rows.shape, (2, 6))
        np.testing.assert_allclose(rows[:, 5], 1.0)


class ConditionsTestCase(unittest.TestCase):

    def test_free(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 100.0)
        report = check_conditions(pair, 1.0, 100.0)
        self.assertAlmostEqual(report.c0, 1.0)
        self.assertAlmostEqual(report.delta, 1.0, places=8)
        self.assertTrue(report.ok)

    def test_repulsive(self):
        model = OscillatorModel(kind=INVERSE_SQUARE_REPULSIVE, rho=2.0)
        pair = solve_fundamental(model, 1000.0)
        report = check_conditions(pair, 1.0, 1000.0)
        self.assertAlmostEqual(report.delta, 3.0, places=2)
        self.assertTrue(report.ok_C)

    def test_empty_range(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        self.assertRaises(InsufficientRange, check_conditions, pair, 5.0, 5.0)
        self.assertRaises(InsufficientRange, check_conditions, pair, 1.0,
                          10.0, samples=4)


class DerivedTestCase(unittest.TestCase):

    def test_free_clocks(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 20.0)
        derived = build_derived(pair, 1, 3.0, 1.0)
        self.assertEqual(derived.weight_exponent, 1.0)
        self.assertAlmostEqual(derived.Y2(math.e ** 2), 2.0, places=6)
        self.assertEqual(derived.Y2(1.0), 0.0)
        np.testing.assert_allclose(derived.Y2([2.0, 4.0]), np.log([2.0, 4.0]),
                                   rtol=1e-7)
        self.assertEqual(float(derived.Y(4.0)), 2.0)
        self.assertEqual(float(derived.dY(4.0)), 0.5)

    def test_y2_matches_pointwise_quadrature(self):
        model = OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=0.1875)
        pair = solve_fundamental(model, 100.0)
        derived = build_derived(pair, 1, 2.5, 1.0)
        t = np.array([[1.5, 7.25], [33.0, 99.9]])
        values = derived.Y2(t)
        self.assertEqual(values.shape, (2, 2))
        for point, value in zip(t.ravel(), values.ravel()):
            expected = quad(lambda s: float(derived.weight(s)), 1.0, point,
                            epsabs=1e-12, epsrel=1e-12, limit=200)[0]
            self.assertAlmostEqual(value, expected, places=8)
        free = build_derived(solve_fundamental(OscillatorModel(ZERO), 100.0),
                             1, 3.0, 1.0)
        grid = np.linspace(1.0, 100.0, 1000)
        np.testing.assert_allclose(free.Y2(grid), np.log(grid), atol=1e-10)

    def test_y_derivative_identity(self):
        model = OscillatorModel(kind=INVERSE_SQUARE_ATTRACTIVE, sigma0=0.1)
        pair = solve_fundamental(model, 30.0)
        derived = build_derived(pair, 2, 2.0, 1.0)
        self.assertLess(derived.derivative_residual(np.linspace(2, 25, 12)),
                        1e-5)

    def test_y1_vanishing(self):
        pair = solve_fundamental(OscillatorModel(CONSTANT, omega2=1.0), 10.0)
        self.assertRaises(SingularY1, build_derived, pair, 1, 3.0, 1.0)

    def test_bad_exponent(self):
        pair = solve_fundamental(OscillatorModel(ZERO), 10.0)
        self.assertRaises(DomainError, build_derived, pair, 1, 1.0, 1.0)


if __name__ == '__main__':
    unittest.main()
