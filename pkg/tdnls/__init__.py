# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

from .version import __version__, __version_info__
from .exceptions import (
    BaseTDNLSError, ConfigError, DomainError, NonConvergence,
    InsufficientRange, SingularY1, BlowupDetected, DegenerateData,
    GridMismatch, NotApplicable, ChirpAliasing
)
from .oscillator import (
    OscillatorModel, FundamentalPair, OscillatorDerived,
    solve_fundamental, check_conditions, build_derived
)
from .criticality import (
    Nonlinearity, classify, threshold_exponents, strong_dissipation,
    predicted_rates, envelope
)
from .spectral import (
    Grid, WaveState, ProfileState, dft, idft, mdfm_apply, lens_transform,
    j_operator, j_norm, interpolate
)
from .solver import (
    InitialData, SimConfig, RunRecord, evolve, cross_validate
)
from .profile import (
    extract_profile, remainder, amplitude_ode, track_profile,
    compare_pde_vs_ode
)
from .harness import (
    ExperimentSpec, fit_decay, run_experiment, korotyaev_check
)
from .config import load_config

import logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())
