# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

class BaseTDNLSError(Exception):
    """Base tdnls error."""


class ConfigError(BaseTDNLSError, ValueError):
    """Configuration file or section value is invalid."""


class DomainError(BaseTDNLSError, ValueError):
    """Model is not defined for the requested parameters or time range."""


class NonConvergence(BaseTDNLSError):
    """Adaptive integration or time stepping failed to reach tolerance."""


class InsufficientRange(BaseTDNLSError):
    """Too few sample points to estimate the requested quantity."""


class SingularY1(BaseTDNLSError):
    """Fundamental solution y1 vanishes where the lens frame is needed."""


class BlowupDetected(BaseTDNLSError):
    """Sup norm of the solution exceeded the configured ceiling."""


class DegenerateData(BaseTDNLSError):
    """Series cannot be fitted: non-positive values or too few points."""


class GridMismatch(BaseTDNLSError):
    """Grids, time grids or frequency selections do not match."""


class NotApplicable(BaseTDNLSError):
    """Rate prediction was asked for outside of its hypotheses."""


class ChirpAliasing(UserWarning):
    """Chirp phase changes by more than pi per grid cell."""
