#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/mtt/targets.py
Potential targets: labeled particle clouds with an existence probability.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import re
from dataclasses import dataclass
from typing import Sequence
import numpy as np
from exonware.xwsystem import get_logger
from ..contracts import IMotionModel
from ..defs import FloatArray, IntArray, Label, TargetKind
from ..errors import XWEchoValidationError
logger = get_logger(__name__)
_LABEL = re.compile(r"(-?\d+)-(-?\d+)-(-?\d+)")


def format_label(label: Label) -> str:
    """Label as 'step-sensor-measurement'."""
    return f"{label[0]}-{label[1]}-{label[2]}"


def parse_label(text: str) -> Label:
    match = _LABEL.fullmatch(str(text).strip())
    if match is None:
        raise XWEchoValidationError(f"Malformed label {text!r}", field="label", value=text)
    return int(match[1]), int(match[2]), int(match[3])


@dataclass
class PotentialTarget:
    """
    Hypothesized target: particles (n, dim) with normalized weights and
    the probability that the target exists.
    """
    label: Label
    particles: FloatArray
    weights: FloatArray | None = None
    existence: float = 0.0
    kind: TargetKind = TargetKind.LEGACY

    def __post_init__(self) -> None:
        self.particles = np.atleast_2d(np.asarray(self.particles, dtype=float))
        n = len(self.particles)
        weights = np.zeros(0) if self.weights is None else np.asarray(self.weights, dtype=float).ravel()
        if weights.size == 0:
            weights = np.full(n, 1.0 / n)
        if weights.size != n:
            raise XWEchoValidationError("One weight per particle required", field="weights", value=weights.size)
        if np.any(weights < 0.0):
            raise XWEchoValidationError("Particle weights must be non-negative", field="weights")
        total = weights.sum()
        self.weights = weights / total if total > 0.0 else np.full(n, 1.0 / n)
        self.existence = float(np.clip(self.existence, 0.0, 1.0))

    def __len__(self) -> int:
        return int(len(self.particles))

    @property
    def dim(self) -> int:
        return int(self.particles.shape[1])

    def mean(self) -> FloatArray:
        """Weighted particle mean (MMSE state estimate)."""
        return self.weights @ self.particles

    def covariance(self) -> FloatArray:
        centered = self.particles - self.mean()
        return (centered * self.weights[:, None]).T @ centered

    def ess(self) -> float:
        """Effective sample size 1 / sum(w^2)."""
        return float(1.0 / np.sum(self.weights**2))


@dataclass(frozen=True)
class Detection:
    """A potential target declared to exist at one step."""
    label: Label
    state: FloatArray
    existence: float


def systematic_resample(weights: FloatArray, rng: np.random.Generator, n: int | None = None) -> IntArray:
    """Indices drawn by systematic resampling."""
    n = len(weights) if n is None else n
    positions = (rng.random() + np.arange(n)) / n
    cumulative = np.cumsum(weights)
    cumulative[-1] = 1.0
    return np.searchsorted(cumulative, positions, side="left").astype(np.int64)


def predict(
    pts: Sequence[PotentialTarget],
    motion: IMotionModel,
    survival_probability: float,
    dt: float,
    rng: np.random.Generator,
) -> list[PotentialTarget]:
    """
    Propagate each particle through the motion model and scale existence by
    the survival probability. Particles without prior mass lose their weight.
    """
    out: list[PotentialTarget] = []
    for pt in pts:
        moved = motion.propagate(pt.particles, dt, rng)
        weights = pt.weights * motion.admissible(moved)
        existence = pt.existence * survival_probability
        if weights.sum() <= 0.0:
            weights = np.full(len(pt), 1.0 / len(pt))
            existence = 0.0
        out.append(PotentialTarget(pt.label, moved, weights, existence, TargetKind.LEGACY))
    return out


def prune(
    pts: Sequence[PotentialTarget],
    threshold: float = 1e-4,
    ess_fraction: float = 0.5,
    rng: np.random.Generator | None = None,
) -> list[PotentialTarget]:
    """
    Drop potential targets with existence below threshold and resample the
    remaining clouds (systematic) whose ESS is below ess_fraction * n.
    """
    rng = rng if rng is not None else np.random.default_rng()
    kept: list[PotentialTarget] = []
    for pt in pts:
        if pt.existence < threshold:
            continue
        if ess_fraction > 0.0 and pt.ess() < ess_fraction * len(pt):
            idx = systematic_resample(pt.weights, rng)
            pt = PotentialTarget(pt.label, pt.particles[idx], np.full(len(idx), 1.0 / len(idx)), pt.existence, pt.kind)
        kept.append(pt)
    dropped = len(pts) - len(kept)
    if dropped:
        logger.debug(f"Pruned {dropped} potential targets")
    return kept


def detect_and_estimate(pts: Sequence[PotentialTarget], threshold: float = 0.5) -> list[Detection]:
    """MMSE estimates of potential targets whose existence exceeds threshold."""
    return [Detection(pt.label, pt.mean(), pt.existence) for pt in pts if pt.existence > threshold]
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "format_label",
    "parse_label",
    "PotentialTarget",
    "Detection",
    "systematic_resample",
    "predict",
    "prune",
    "detect_and_estimate",
]
