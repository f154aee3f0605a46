#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/sim/waveform.py
Multichannel recordings of clicking sources for signal-chain fixtures.
Clicks are Gaussian-enveloped tones evaluated at the exact arrival time at
every hydrophone (spherical spreading, iso-velocity). The instrument noise
is white per channel plus tones shared by all channels whose amplitudes
follow a periodic on/off schedule.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Sequence
import numpy as np
from exonware.xwsystem import get_logger
from ..defs import FloatArray
from ..errors import XWEchoValidationError
from ..signal import SampledSignal
from ..tracking import ArrayGeometry
logger = get_logger(__name__)


@dataclass(frozen=True)
class ClickSource:
    """A source moving on a straight line that clicks at a fixed interval."""
    start: FloatArray
    velocity: FloatArray = field(default_factory=lambda: np.zeros(3))
    click_interval: float = 0.4
    level: float = 1.0
    """Click peak amplitude at 1000 m range."""

    def position(self, t: float | FloatArray) -> FloatArray:
        t = np.asarray(t, dtype=float)
        return np.asarray(self.start, dtype=float) + t[..., None] * np.asarray(self.velocity, dtype=float)


@dataclass(frozen=True)
class HarmonicNoise:
    """
    Tones common to all channels. Tone i is on during the fraction duty of
    each period, starting at phase i / len(frequencies) of the period.
    """
    frequencies: tuple[float, ...] = (18_000.0, 27_500.0, 41_000.0)
    amplitude: float = 0.05
    period: float = 2.0
    duty: float = 0.5

    def render(self, t: FloatArray) -> FloatArray:
        out = np.zeros_like(t)
        for i, f in enumerate(self.frequencies):
            phase = np.mod(t / self.period - i / len(self.frequencies), 1.0)
            out += self.amplitude * (phase < self.duty) * np.sin(2.0 * np.pi * f * t)
        return out


def gabor_click(t: FloatArray, center_hz: float = 30_000.0, width: float = 8e-6) -> FloatArray:
    """Gaussian-enveloped tone centred at t = 0."""
    return np.exp(-0.5 * (t / width) ** 2) * np.cos(2.0 * np.pi * center_hz * t)


def render_channels(
    sources: Sequence[ClickSource],
    geometry: ArrayGeometry,
    fs: float = 100_000.0,
    duration: float = 30.0,
    rng: np.random.Generator | int | None = None,
    white_std: float = 0.01,
    harmonic: HarmonicNoise | None = None,
    t0: float = 0.0,
    center_hz: float = 30_000.0,
    width: float = 8e-6,
) -> list[SampledSignal]:
    """
    One channel per hydrophone, array by array. Times run from t0; the
    harmonic schedule is evaluated on absolute time so recordings with
    different t0 share one noise phase.
    """
    if fs <= 0.0 or duration <= 0.0:
        raise XWEchoValidationError("fs and duration must be positive", field="fs", value=(fs, duration))
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    n = int(round(duration * fs))
    t = t0 + np.arange(n) / fs
    hydrophones = np.vstack(geometry.arrays)
    channels = np.zeros((len(hydrophones), n))
    if white_std > 0.0:
        channels += rng.normal(0.0, white_std, size=channels.shape)
    if harmonic is not None:
        channels += harmonic.render(t)[None, :]
    half = int(np.ceil(8.0 * width * fs)) + 1
    n_clicks = 0
    for source in sources:
        emissions = t0 + rng.uniform(0.0, source.click_interval) + np.arange(0.0, duration, source.click_interval)
        for te in emissions:
            p = source.position(te - t0)
            for h, q in enumerate(hydrophones):
                r = float(np.linalg.norm(p - q))
                arrival = te + r / geometry.sound_speed
                centre = int(round((arrival - t0) * fs))
                lo, hi = max(0, centre - half), min(n, centre + half + 1)
                if lo >= hi:
                    continue
                channels[h, lo:hi] += source.level * (1000.0 / r) * gabor_click(t[lo:hi] - arrival, center_hz, width)
            n_clicks += 1
    logger.debug(f"Rendered {n_clicks} clicks into {len(hydrophones)} channels of {duration} s")
    return [SampledSignal(c, fs, t0) for c in channels]
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "ClickSource",
    "HarmonicNoise",
    "gabor_click",
    "render_channels",
]
