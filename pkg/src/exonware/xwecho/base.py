#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/base.py
XWEcho Abstract Base Classes
This module defines abstract base classes that extend interfaces from contracts.py.
All abstract classes start with 'A' and extend 'I' interfaces.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from abc import ABC, abstractmethod
import numpy as np
from exonware.xwsystem import get_logger
from .contracts import IMotionModel, IMeasurementFunction, IMeasurementModel
from .defs import FloatArray
from .errors import XWEchoValidationError
logger = get_logger(__name__)
_SQRT_2PI = float(np.sqrt(2.0 * np.pi))


def gaussian_pdf(residual: FloatArray | float, std: float) -> FloatArray:
    """Zero-mean Gaussian density evaluated at residual."""
    if std <= 0.0:
        raise XWEchoValidationError("Gaussian std must be positive", field="std", value=std)
    r = np.asarray(residual, dtype=float) / std
    return np.exp(-0.5 * r * r) / (std * _SQRT_2PI)
# ==============================================================================
# MOTION
# ==============================================================================


class AMotionModel(ABC, IMotionModel):
    """
    Linear Gaussian motion x' = F x + G w with w ~ N(0, Q_w).
    Subclasses provide F, G and the driving covariance for a step length.
    """

    def __init__(self, driving_std: float):
        if driving_std < 0.0:
            raise XWEchoValidationError("driving_std must be non-negative", field="driving_std", value=driving_std)
        self.driving_std = float(driving_std)

    @property
    @abstractmethod
    def dim(self) -> int:
        """State dimension."""

    @abstractmethod
    def transition(self, dt: float) -> FloatArray:
        """Transition matrix F for step length dt."""

    @abstractmethod
    def noise_covariance(self, dt: float) -> FloatArray:
        """Covariance of the additive state noise G w for step length dt."""

    def noise_factor(self, dt: float) -> FloatArray:
        """Matrix L with L L^T equal to the state-noise covariance (may be rank deficient)."""
        cov = self.noise_covariance(dt)
        eigval, eigvec = np.linalg.eigh(cov)
        return eigvec * np.sqrt(np.clip(eigval, 0.0, None))

    def propagate(self, particles: FloatArray, dt: float, rng: np.random.Generator) -> FloatArray:
        moved = particles @ self.transition(dt).T
        if self.driving_std > 0.0:
            factor = self.noise_factor(dt)
            moved = moved + rng.standard_normal(particles.shape) @ factor.T
        return moved

    def predict_state(self, state: FloatArray, dt: float, rng: np.random.Generator | None = None) -> FloatArray:
        """Propagate one state vector; noise is sampled only when rng is given."""
        x = np.asarray(state, dtype=float).reshape(1, -1)
        if rng is None or self.driving_std == 0.0:
            return (x @ self.transition(dt).T)[0]
        return self.propagate(x, dt, rng)[0]

    def admissible(self, particles: FloatArray) -> np.ndarray:
        return np.ones(len(particles), dtype=bool)
# ==============================================================================
# MEASUREMENT
# ==============================================================================


class AMeasurementModel(ABC, IMeasurementModel):
    """
    Scalar delay measurement z = h(x) + v, v ~ N(0, sigma^2), with false
    positives uniform on [-T_max, T_max].
    """

    def __init__(self, sensor: int, max_delay: float, noise_std: float):
        if max_delay <= 0.0:
            raise XWEchoValidationError("max_delay must be positive", field="max_delay", value=max_delay)
        if noise_std <= 0.0:
            raise XWEchoValidationError("noise_std must be positive", field="noise_std", value=noise_std)
        self.sensor = int(sensor)
        self.max_delay = float(max_delay)
        self.noise_std = float(noise_std)

    @abstractmethod
    def predict_measurement(self, particles: FloatArray) -> FloatArray:
        """h(x) per particle, shape (n,)."""

    @abstractmethod
    def sample_birth(self, z: float, n: int, rng: np.random.Generator) -> tuple[FloatArray, float]:
        """Particles of a new PT and its birth evidence."""

    def in_support(self, z: FloatArray) -> np.ndarray:
        return np.abs(np.asarray(z, dtype=float)) <= self.max_delay

    def clutter_density(self, z: FloatArray) -> FloatArray:
        z = np.asarray(z, dtype=float)
        return np.where(self.in_support(z), 1.0 / (2.0 * self.max_delay), 0.0)

    def likelihood(self, z: FloatArray, particles: FloatArray) -> FloatArray:
        predicted = self.predict_measurement(particles)
        z = np.asarray(z, dtype=float).reshape(-1, 1)
        return gaussian_pdf(z - predicted[None, :], self.noise_std)

    def begin_step(self, step: int, rng: np.random.Generator) -> None:
        return None

    def flow_function(self) -> IMeasurementFunction | None:
        return None
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "gaussian_pdf",
    "AMotionModel",
    "AMeasurementModel",
]
