#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/contracts.py
XWEcho Interfaces and Contracts
This module defines the interfaces that parameterize the multi-target
tracking engine. All interfaces use the 'I' prefix.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from typing import Protocol, runtime_checkable
import numpy as np
from .defs import FloatArray
# ==============================================================================
# MOTION INTERFACE
# ==============================================================================
@runtime_checkable

class IMotionModel(Protocol):
    """
    Single-target state transition used in the prediction step.
    Particle arrays have shape (n_particles, dim).
    """
    @property

    def dim(self) -> int:
        """State dimension."""
        ...

    def propagate(self, particles: FloatArray, dt: float, rng: np.random.Generator) -> FloatArray:
        """Propagate particles over dt with sampled driving noise."""
        ...

    def admissible(self, particles: FloatArray) -> np.ndarray:
        """Boolean mask of particles with nonzero prior mass."""
        ...
# ==============================================================================
# MEASUREMENT INTERFACES
# ==============================================================================
@runtime_checkable

class IMeasurementFunction(Protocol):
    """Differentiable scalar measurement function h(x) used by particle flow."""

    def evaluate(self, states: FloatArray) -> FloatArray:
        """h evaluated per state, shape (n,)."""
        ...

    def jacobian(self, states: FloatArray) -> FloatArray:
        """dh/dx per state, shape (n, dim)."""
        ...
@runtime_checkable


class IMeasurementModel(Protocol):
    """
    Scalar measurement model of one sensor: likelihood, false-positive
    density, support and birth proposal.
    """
    sensor: int
    noise_std: float

    def in_support(self, z: FloatArray) -> np.ndarray:
        """Boolean mask of measurements inside the model support."""
        ...

    def clutter_density(self, z: FloatArray) -> FloatArray:
        """False-positive pdf f_fp at each measurement."""
        ...

    def likelihood(self, z: FloatArray, particles: FloatArray) -> FloatArray:
        """f(z_m | x_p) with shape (n_measurements, n_particles)."""
        ...

    def sample_birth(self, z: float, n: int, rng: np.random.Generator) -> tuple[FloatArray, float]:
        """Particles of a new PT and the birth evidence integral f_n(x) f(z|x) dx."""
        ...

    def begin_step(self, step: int, rng: np.random.Generator) -> None:
        """Hook called once per step before the sensor is processed."""
        ...

    def flow_function(self) -> IMeasurementFunction | None:
        """Measurement function for particle flow, or None for plain reweighting."""
        ...
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "IMotionModel",
    "IMeasurementFunction",
    "IMeasurementModel",
]
