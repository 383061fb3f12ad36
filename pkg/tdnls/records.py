# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Configuration section schemas and report records.

Sections describe what may appear in a configuration file; every key has a
default, so an empty file gives a valid σ≡0 run. Records describe what the
numerics report back; they serialize to the JSON documents written by the
command line tools.
"""

from .constants import (
    CRITICAL, SUB_CRITICAL, SUPER_CRITICAL, INDETERMINATE,
    MODEL_KINDS, ZERO, GLUE_MATCHED, GLUE_CONSTANT, ORIGINAL, LENS,
    FIT_MODELS, POWER_OF_T, ODE_TOL, WRONSKIAN_TOL, DELTA_MIN, LEDGER_TOL,
    DT_MIN, LINF_CEILING, BOUNDARY_RATIO, EPSILON1, EXPONENT_TOLERANCE,
)
from .mapping import (
    Section, Record, BoolField, ComponentField, ConstantField, DictField,
    FloatField, IntegerField, ListField, RepeatedComponentField, SetField,
    TextField,
)

__all__ = ['GridSection', 'OscillatorSection', 'NonlinearitySection',
           'InitialSection', 'RunSection', 'SweepSection', 'FitSection',
           'ConditionReport', 'ThresholdExponents', 'RatePrediction',
           'CriticalityReport', 'FitResult', 'CrossValidation',
           'ProfileComparison', 'KorotyaevReport']

#: +-----------+---------+----------------------------------------------+
#: | key       | default | meaning                                      |
#: +===========+=========+==============================================+
#: | n         |       1 | spatial dimension, 1 to 3                    |
#: +-----------+---------+----------------------------------------------+
#: | points    |     256 | grid points per axis, power of two >= 16     |
#: +-----------+---------+----------------------------------------------+
#: | L         |    32.0 | box half width, domain [-L, L)^n             |
#: +-----------+---------+----------------------------------------------+
#: | dealias   |      no | apply the 2/3 rule after nonlinear substeps  |
#: +-----------+---------+----------------------------------------------+
#:
GridSection = Section.build(
    SetField(name='n', default=1, values=(1, 2, 3),
             field=IntegerField()),
    IntegerField(name='points', default=256, min_value=16),
    FloatField(name='L', default=32.0, min_value=0.0, exclusive=True),
    BoolField(name='dealias', default=False),
)

#: +---------------+----------+------------------------------------------+
#: | key           | default  | meaning                                  |
#: +===============+==========+==========================================+
#: | kind          | zero     | sigma model family                       |
#: +---------------+----------+------------------------------------------+
#: | sigma0        |      0.0 | attractive inverse-square strength       |
#: +---------------+----------+------------------------------------------+
#: | rho           |      0.0 | repulsive inverse-square strength        |
#: +---------------+----------+------------------------------------------+
#: | omega2        |      1.0 | value of the constant model              |
#: +---------------+----------+------------------------------------------+
#: | strength      |      1.0 | sub-quadratic amplitude a                |
#: +---------------+----------+------------------------------------------+
#: | decay         |      3.0 | sub-quadratic exponent q > 2             |
#: +---------------+----------+------------------------------------------+
#: | knots, values |          | tabulated sigma samples                  |
#: +---------------+----------+------------------------------------------+
#: | table         |          | CSV file with columns t, sigma           |
#: +---------------+----------+------------------------------------------+
#: | t_start       |      1.0 | end of the glue segment                  |
#: +---------------+----------+------------------------------------------+
#: | T0            |      1.0 | start of conditions (A)-(C)              |
#: +---------------+----------+------------------------------------------+
#: | horizon       |          | ODE horizon, run end when unset          |
#: +---------------+----------+------------------------------------------+
#: | glue          |  matched | sigma on [0, t_start) for inverse-square |
#: +---------------+----------+------------------------------------------+
#:
OscillatorSection = Section.build(
    SetField(name='kind', default=ZERO, values=MODEL_KINDS),
    FloatField(name='sigma0', default=0.0, min_value=0.0),
    FloatField(name='rho', default=0.0, min_value=0.0),
    FloatField(name='omega2', default=1.0),
    FloatField(name='strength', default=1.0),
    FloatField(name='decay', default=3.0),
    ListField(FloatField(), name='knots'),
    ListField(FloatField(), name='values'),
    TextField(name='table'),
    FloatField(name='t_start', default=1.0, min_value=0.0),
    FloatField(name='T0', default=1.0, min_value=0.0),
    FloatField(name='horizon', min_value=0.0, exclusive=True),
    SetField(name='glue', default=GLUE_MATCHED,
             values=(GLUE_MATCHED, GLUE_CONSTANT)),
    FloatField(name='tol', default=ODE_TOL, min_value=0.0, exclusive=True),
    FloatField(name='wronskian_tol', default=WRONSKIAN_TOL,
               min_value=0.0, exclusive=True),
    FloatField(name='delta_min', default=DELTA_MIN, min_value=0.0,
               exclusive=True),
)

NonlinearitySection = Section.build(
    FloatField(name='p', default=3.0, min_value=1.0, exclusive=True),
    FloatField(name='lambda_re', default=0.0),
    FloatField(name='lambda_im', default=-1.0, max_value=0.0),
)

InitialSection = Section.build(
    SetField(name='kind', default='gaussian',
             values=('gaussian', 'fourier_bump', 'file', 'random')),
    FloatField(name='width', default=1.0, min_value=0.0, exclusive=True),
    FloatField(name='amplitude', default=1.0),
    ListField(FloatField(), name='center'),
    FloatField(name='chirp', default=0.0),
    BoolField(name='normalize', default=True),
    FloatField(name='bump_radius', default=2.0, min_value=0.0,
               exclusive=True),
    ListField(FloatField(), name='bump_center'),
    TextField(name='path'),
    IntegerField(name='modes', default=8, min_value=1),
)

#: +----------------+----------+---------------------------------------------+
#: | key            | default  | meaning                                     |
#: +================+==========+=============================================+
#: | t0, t_end      | 1.0, 50  | time span of the run                        |
#: +----------------+----------+---------------------------------------------+
#: | dt             |     0.01 | base time step                              |
#: +----------------+----------+---------------------------------------------+
#: | frame          |     lens | frame the equation is stepped in            |
#: +----------------+----------+---------------------------------------------+
#: | splitting      |   strang | strang (second order) or lie (first order)  |
#: +----------------+----------+---------------------------------------------+
#: | record_every   |       10 | base steps between diagnostics              |
#: +----------------+----------+---------------------------------------------+
#: | snapshot_every |        0 | records between field snapshots, 0 for none |
#: +----------------+----------+---------------------------------------------+
#: | s              |      1.0 | Sobolev regularity of the diagnostics       |
#: +----------------+----------+---------------------------------------------+
#:
RunSection = Section.build(
    FloatField(name='t0', default=1.0, min_value=0.0),
    FloatField(name='t_end', default=50.0),
    FloatField(name='dt', default=0.01, min_value=0.0, exclusive=True),
    SetField(name='frame', default=LENS, values=(LENS, ORIGINAL)),
    SetField(name='splitting', default='strang', values=('strang', 'lie')),
    IntegerField(name='record_every', default=10, min_value=1),
    IntegerField(name='snapshot_every', default=0, min_value=0),
    FloatField(name='s', default=1.0, min_value=0.0),
    FloatField(name='epsilon1', default=EPSILON1, min_value=0.0),
    FloatField(name='ledger_tol', default=LEDGER_TOL, min_value=0.0,
               exclusive=True),
    BoolField(name='adaptive', default=True),
    FloatField(name='dt_min', default=DT_MIN, min_value=0.0, exclusive=True),
    FloatField(name='linf_ceiling', default=LINF_CEILING, min_value=0.0,
               exclusive=True),
    FloatField(name='boundary_ratio', default=BOUNDARY_RATIO, min_value=0.0),
    IntegerField(name='seed', default=0, min_value=0),
)

SweepSection = Section.build(
    ListField(FloatField(), name='amplitudes'),
    ListField(FloatField(min_value=1.0, exclusive=True), name='powers'),
    ListField(SetField(values=MODEL_KINDS), name='models'),
    IntegerField(name='refinement', default=1, min_value=1),
    BoolField(name='refine_grid', default=False),
    IntegerField(name='workers', default=1, min_value=1),
    ListField(SetField(values=('ledger', 'cross_validate', 'profile',
                               'fits')),
              name='comparisons', default=lambda: ['ledger', 'fits']),
    FloatField(name='interior_s'),
)

FitSection = Section.build(
    SetField(name='quantity', default='l2', values=('l2', 'linf')),
    SetField(name='model', default=POWER_OF_T, values=FIT_MODELS),
    FloatField(name='window_start'),
    FloatField(name='window_end'),
    FloatField(name='tolerance', default=EXPONENT_TOLERANCE, min_value=0.0),
)


class ConditionReport(Record):
    """Outcome of probing conditions (A)-(C) on a sample grid."""
    record = ConstantField(default='conditions')
    T0 = FloatField()
    horizon = FloatField()
    samples = IntegerField()
    c0 = FloatField()
    delta = FloatField()
    prefactor = FloatField()
    ok_A = BoolField(default=False)
    ok_B = BoolField(default=False)
    ok_C = BoolField(default=False)

    @property
    def ok(self):
        return self.ok_A and self.ok_B and self.ok_C


ThresholdExponents = Record.build(
    IntegerField(name='n', min_value=1),
    FloatField(name='p_n'),
    FloatField(name='p_star'),
    FloatField(name='p_star_star'),
)


class RatePrediction(Record):
    """Decay law predicted by one of the theorems.

    `variable` tells how the envelope depends on time: ``t`` for
    ``C t^exponent``, ``Y2`` for ``C Y2(t)^exponent``, ``linf`` for the
    pointwise envelope ``C |y2|^(-n/2) Y2^exponent``, ``max_t`` for the
    maximum of two powers of t (``exponent`` and ``exponent2``),
    ``bounded`` for a uniform bound and ``lower`` for the plateau level
    ``exp(-C |Im lambda| norm0^p) ||u0||``.
    """
    record = ConstantField(default='prediction')
    theorem = TextField()
    norm = SetField(values=('l2', 'linf', 'hs_half', 'gradient', 'weighted'))
    variable = SetField(values=('t', 'Y2', 'linf', 'max_t', 'bounded',
                                'lower'))
    formula = TextField()
    exponent = FloatField()
    exponent2 = FloatField()
    parameters = DictField(FloatField())
    applicable = BoolField(default=False)
    reason = TextField()


class CriticalityReport(Record):
    """Classification of a configuration against the criticality trichotomy."""
    record = ConstantField(default='criticality')
    classification = SetField(values=(CRITICAL, SUB_CRITICAL, SUPER_CRITICAL,
                                      INDETERMINATE),
                              default=INDETERMINATE)
    n = IntegerField(min_value=1)
    p = FloatField()
    alpha = FloatField()
    c_plus = FloatField()
    tail_residual = FloatField()
    delta = FloatField()
    delta_star = FloatField()
    delta_upper = FloatField()
    p_critical = FloatField()
    y2_exponent = FloatField()
    strong_dissipation = BoolField()
    gamma = FloatField()
    theta_low = FloatField(default=0.0)
    theta_high = FloatField()
    theta = FloatField()
    s = FloatField()
    s1 = FloatField()
    conditions = ComponentField(ConditionReport)
    thresholds = ComponentField(ThresholdExponents)
    predicted = RepeatedComponentField(RatePrediction)

    @property
    def theta_window_nonempty(self):
        return self.theta_high is not None and self.theta_high > 0


class FitResult(Record):
    """Least squares fit of a recorded norm against a decay model."""
    record = ConstantField(default='fit')
    quantity = SetField(values=('l2', 'linf', 'hs_half', 'gradient',
                                'weighted'))
    model = SetField(values=FIT_MODELS)
    fitted_value = FloatField()
    slope = FloatField()
    intercept = FloatField()
    residual = FloatField()
    window_start = FloatField()
    window_end = FloatField()
    points = IntegerField()


CrossValidation = Record.build(
    ConstantField(name='record', default='cross_validation'),
    ListField(FloatField(), name='times'),
    ListField(FloatField(), name='l2_discrepancy'),
    ListField(FloatField(), name='linf_discrepancy'),
    FloatField(name='terminal_l2'),
    FloatField(name='terminal_linf'),
)


class ProfileComparison(Record):
    """PDE extracted profile amplitudes against the amplitude law."""
    record = ConstantField(default='profile_comparison')
    frequencies = DictField(ListField(FloatField()))
    discrepancy = DictField(FloatField())
    max_discrepancy = FloatField()
    remainder_budget = FloatField()
    window_start = FloatField()
    top_term_dominant = BoolField(default=False)


class KorotyaevReport(Record):
    """Pointwise dispersive bound measured on linear runs."""
    record = ConstantField(default='korotyaev')
    starts = ListField(FloatField())
    sup_ratio = ListField(FloatField())
    oracle_ratio = FloatField()
    oracle_deviation = FloatField()
    bounded = BoolField(default=False)
