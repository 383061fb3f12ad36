# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

#: Frame tag of fields living in the physical coordinates.
ORIGINAL = 'original'
#: Frame tag of fields living in the lens (chirp + dilation) coordinates.
LENS = 'lens'
#: Lens transform directions.
TO_LENS = 'to_lens'
TO_ORIGINAL = 'to_original'

#: Criticality classes.
CRITICAL = 'critical'
SUB_CRITICAL = 'sub_critical'
SUPER_CRITICAL = 'super_critical'
INDETERMINATE = 'indeterminate'

#: Oscillator model kinds.
ZERO = 'zero'
CONSTANT = 'constant'
INVERSE_SQUARE_ATTRACTIVE = 'inverse_square_attractive'
INVERSE_SQUARE_REPULSIVE = 'inverse_square_repulsive'
SUB_QUADRATIC = 'sub_quadratic'
TABULATED = 'tabulated'
MODEL_KINDS = (ZERO, CONSTANT, INVERSE_SQUARE_ATTRACTIVE,
               INVERSE_SQUARE_REPULSIVE, SUB_QUADRATIC, TABULATED)

#: Glue choices for sigma on [0, t_start) of the inverse-square models.
GLUE_MATCHED = 'matched'
GLUE_CONSTANT = 'constant'

#: Fundamental pair evaluation methods.
CLOSED_FORM = 'closed_form'
NUMERIC_ODE = 'numeric_ode'

#: Fit models of :func:`tdnls.harness.fit_decay`.
POWER_OF_T = 'power_of_t'
POWER_OF_Y2 = 'power_of_y2'
LOG_POWER = 'log_power'
PLATEAU = 'plateau'
FIT_MODELS = (POWER_OF_T, POWER_OF_Y2, LOG_POWER, PLATEAU)

#: Relative tolerance of the adaptive ODE integrator.
ODE_TOL = 1e-10
#: Accepted drift of the Wronskian away from 1.
WRONSKIAN_TOL = 1e-8
#: Absolute tolerance of the Y2 quadrature.
QUAD_TOL = 1e-8
#: Number of samples used when probing conditions (A)-(C) and tail fits.
CONDITION_SAMPLES = 512
#: Minimal number of samples inside any fit window.
MIN_FIT_SAMPLES = 8
#: Smallest decay exponent accepted by condition (C).
DELTA_MIN = 0.05
#: Lower bound below which |y2| counts as vanishing for condition (A).
C0_FLOOR = 1e-12
#: Lower bound on |y1| for the lens frame.
Y1_FLOOR = 1e-10
#: Tolerance on the fitted tail exponent separating the criticality classes.
TOL_CLASS = 1e-2
#: Log-scale RMS above which a tail fit is reported as indeterminate.
MAX_TAIL_RESIDUAL = 5e-2
#: Fraction of the admissible theta window taken by default.
THETA_FRACTION = 0.9
#: Upper clamp of the default theta.
THETA_CEILING = 0.99

#: Relative ledger residual accepted over a whole run.
LEDGER_TOL = 1e-4
#: Smallest time step before the adaptive stepper gives up.
DT_MIN = 1e-6
#: Sup-norm ceiling signalling a mis-set sign of Im lambda.
LINF_CEILING = 1e6
#: Boundary to peak amplitude ratio above which a warning is logged.
BOUNDARY_RATIO = 1e-10
#: Time weight exponent of the X-norm diagnostic.
EPSILON1 = 0.01

#: Remainder dominance factor opening the profile comparison window.
DOMINANCE_FACTOR = 0.1

#: Default relative tolerance when comparing measured and predicted exponents.
EXPONENT_TOLERANCE = 0.25

#: Largest number of points per axis allowed for three-dimensional grids.
MAX_POINTS_3D = 128
#: Smallest number of points per axis.
MIN_POINTS = 16

#: Binary field snapshot magic and format version.
FIELD_MAGIC = b'TDNL'
FIELD_VERSION = 1
