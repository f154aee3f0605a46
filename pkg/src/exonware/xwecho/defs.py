#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/defs.py
XWEcho Type Definitions and Constants
This module defines the type aliases, enums and physical constants shared by
the signal chain, the trackers and the simulation.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from enum import Enum
from typing import Any
import numpy as np
import numpy.typing as npt
# ==============================================================================
# TYPE ALIASES
# ==============================================================================
FloatArray = npt.NDArray[np.float64]
"""Type alias for float64 numpy arrays."""
IntArray = npt.NDArray[np.int64]
"""Type alias for int64 numpy arrays."""
Label = tuple[int, int, int]
"""Potential-target label: (birth step, birth sensor, birth measurement index)."""
MeasurementStream = dict[int, dict[int, FloatArray]]
"""Measurements keyed by step then by sensor; values are sorted delays in seconds."""
ConfigData = dict[str, Any]
"""Type alias for plain configuration dictionaries."""
# ==============================================================================
# ENUMS
# ==============================================================================


class WeightingKind(str, Enum):
    """
    Frequency weightings for the generalized cross-correlation.
    """
    NONE = "none"
    """Unweighted cross-correlation."""
    PHAT = "phat"
    """Phase transform: unit-magnitude cross spectrum."""
    SCOT = "scot"
    """Smoothed coherence transform: normalized by the frame auto spectra."""
    WIN = "win"
    """Whitening by the periodic instrument-noise template."""

    def __str__(self) -> str:
        """Get string representation."""
        return self.value


class AssociationSolver(str, Enum):
    """Solvers for the per-sensor data-association marginals."""
    SPA = "spa"
    """Iterative sum-product message passing."""
    EXACT = "exact"
    """Enumeration over all valid joint association events."""
    AUTO = "auto"
    """Enumeration when the event count is small, message passing otherwise."""

    def __str__(self) -> str:
        """Get string representation."""
        return self.value


class NstMode(str, Enum):
    """Localization used by the non-sequential baseline."""
    TDOA = "tdoa"
    """Weighted least squares on all TDOAs of a step."""
    DOA = "doa"
    """Triangulation of the per-array direction-of-arrival rays."""

    def __str__(self) -> str:
        """Get string representation."""
        return self.value


class TargetKind(str, Enum):
    """Origin of a potential target within the current sensor update."""
    LEGACY = "legacy"
    """Carried over from an earlier step or sensor."""
    NEW = "new"
    """Spawned by a measurement of the current sensor."""

    def __str__(self) -> str:
        """Get string representation."""
        return self.value


class TrackingMethod(str, Enum):
    """Trackers compared by the Monte-Carlo study."""
    MTT = "mtt"
    SBT = "sbt"
    NST = "nst"

    def __str__(self) -> str:
        """Get string representation."""
        return self.value


class ExitCode(int, Enum):
    """Process exit codes of the command-line interface."""
    OK = 0
    INTERNAL = 1
    USAGE = 2
    INPUT = 3
    NUMERICAL = 4
# ==============================================================================
# CONSTANTS
# ==============================================================================
SOUND_SPEED = 1490.0
"""Default speed of sound in sea water, m/s."""
DEFAULT_SAMPLE_RATE = 100_000.0
DEFAULT_NFFT = 512
DEFAULT_OVERLAP = 0.5
DEFAULT_WINDOW = "hamming"
DEFAULT_TEMPLATE_PERIOD = 31.65
"""Period of the instrument self-noise pattern, seconds."""
DEFAULT_P_TDOA = 0.15
DEFAULT_STRONG_PEAK = 10.0
DEFAULT_ECHO_WINDOW = 0.040
DEFAULT_STEP_LENGTH = 7.0
DEFAULT_CLUSTER_SAMPLES = 2
DEFAULT_PENALTY = 110.0
"""Per-step position error charged for a missing or grossly wrong estimate, m."""
PAIR_MAP: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
"""Hydrophone pairs of a four-element array, in sensor order."""
HYDROPHONES_PER_ARRAY = 4
CSV_FLOAT_FORMAT = "%.10g"
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "FloatArray",
    "IntArray",
    "Label",
    "MeasurementStream",
    "ConfigData",
    "WeightingKind",
    "AssociationSolver",
    "NstMode",
    "TargetKind",
    "TrackingMethod",
    "ExitCode",
    "SOUND_SPEED",
    "DEFAULT_SAMPLE_RATE",
    "DEFAULT_NFFT",
    "DEFAULT_OVERLAP",
    "DEFAULT_WINDOW",
    "DEFAULT_TEMPLATE_PERIOD",
    "DEFAULT_P_TDOA",
    "DEFAULT_STRONG_PEAK",
    "DEFAULT_ECHO_WINDOW",
    "DEFAULT_STEP_LENGTH",
    "DEFAULT_CLUSTER_SAMPLES",
    "DEFAULT_PENALTY",
    "PAIR_MAP",
    "HYDROPHONES_PER_ARRAY",
    "CSV_FLOAT_FORMAT",
]
