#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/tracking/tdoa.py
First tracking stage: one independent tracker per TDOA sensor.
The state is (delay, delay rate) under a constant-velocity model; confirmed
tracks are re-emitted as delay estimates for the 3-D stage.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, Mapping, Sequence
import numpy as np
import pandas as pd
from scipy.stats import norm, truncnorm
from exonware.xwsystem import get_logger
from ..base import AMeasurementModel, AMotionModel, gaussian_pdf
from ..config import MttHyperparams, TdoaTrackerConfig
from ..defs import DEFAULT_STEP_LENGTH, FloatArray, MeasurementStream
from ..errors import XWEchoGeometryError
from ..measurements import TdoaMeasurementSet
from ..mtt import Track, TrackerResult, format_label, run_tracker, sort_tracks
from ..tables import TDOA_TRACK_COLUMNS, empty_table, write_table
from .geometry import ArrayGeometry, SensorGeometry
logger = get_logger(__name__)
# ==============================================================================
# MODELS
# ==============================================================================


class CvMotionModel(AMotionModel):
    """Constant velocity in delay space; delays stay within [-T_max, T_max]."""

    def __init__(self, driving_std: float, max_delay: float | None = None):
        super().__init__(driving_std)
        self.max_delay = max_delay

    @property
    def dim(self) -> int:
        return 2

    def transition(self, dt: float) -> FloatArray:
        return np.array([[1.0, dt], [0.0, 1.0]])

    def noise_covariance(self, dt: float) -> FloatArray:
        return self.driving_std**2 * np.array([[dt**3 / 3.0, dt**2 / 2.0], [dt**2 / 2.0, dt]])

    def propagate(self, particles: FloatArray, dt: float, rng: np.random.Generator) -> FloatArray:
        moved = super().propagate(particles, dt, rng)
        if self.max_delay is not None:
            moved[:, 0] = np.clip(moved[:, 0], -self.max_delay, self.max_delay)
        return moved


def cv_predict(
    state: FloatArray,
    step_length: float,
    driving_std: float,
    rng: np.random.Generator | None = None,
) -> FloatArray:
    """Propagate one (delay, rate) state; noiseless unless rng is given."""
    return CvMotionModel(driving_std).predict_state(state, step_length, rng)


def tdoa_likelihood(z: float | FloatArray, delay: float | FloatArray, noise_std: float) -> FloatArray:
    """Gaussian density of a measured delay around the true delay."""
    return gaussian_pdf(np.asarray(z, dtype=float) - np.asarray(delay, dtype=float), noise_std)


class TdoaMeasurementModel(AMeasurementModel):
    """
    z = d + v for one sensor. New targets are uniform in delay on
    [-T_max, T_max] with a zero-mean Gaussian delay-rate prior.
    """

    def __init__(self, sensor: int, max_delay: float, noise_std: float, rate_prior_fraction: float = 0.01):
        super().__init__(sensor, max_delay, noise_std)
        self.rate_std = rate_prior_fraction * max_delay

    def predict_measurement(self, particles: FloatArray) -> FloatArray:
        return particles[:, 0]

    def sample_birth(self, z: float, n: int, rng: np.random.Generator) -> tuple[FloatArray, float]:
        a = (-self.max_delay - z) / self.noise_std
        b = (self.max_delay - z) / self.noise_std
        particles = np.empty((n, 2))
        particles[:, 0] = truncnorm.rvs(a, b, loc=z, scale=self.noise_std, size=n, random_state=rng)
        particles[:, 1] = rng.normal(0.0, self.rate_std, size=n)
        evidence = float((norm.cdf(b) - norm.cdf(a)) / (2.0 * self.max_delay))
        return particles, evidence
# ==============================================================================
# TRACKING
# ==============================================================================


def track_sensor(
    stream: MeasurementStream,
    sensor: SensorGeometry,
    hp: MttHyperparams | None = None,
    config: TdoaTrackerConfig | None = None,
    step_length: float = DEFAULT_STEP_LENGTH,
    rng: np.random.Generator | None = None,
    steps: Sequence[int] | None = None,
) -> TrackerResult:
    """Track the delays of one sensor; other sensors in the stream are ignored."""
    hp = hp or MttHyperparams.tdoa_default()
    config = config or TdoaTrackerConfig()
    own = {k: {sensor.index: by_sensor[sensor.index]} for k, by_sensor in stream.items() if sensor.index in by_sensor}
    if steps is None and stream:
        steps = range(min(stream), max(stream) + 1)
    motion = CvMotionModel(hp.driving_std, sensor.max_delay)
    model = TdoaMeasurementModel(sensor.index, sensor.max_delay, hp.measurement_std, config.rate_prior_fraction)
    result = run_tracker(own, motion, {sensor.index: model}, hp, step_length, rng, steps=steps or [])
    for track in result.tracks:
        track.sensor = sensor.index
    logger.info(f"Sensor {sensor.index}: {len(result.tracks)} TDOA tracks")
    return result


def track_all_sensors(
    stream: MeasurementStream,
    geometry: ArrayGeometry,
    hp: MttHyperparams | None = None,
    config: TdoaTrackerConfig | None = None,
    step_length: float = DEFAULT_STEP_LENGTH,
    seed: int = 0,
    sensors: Iterable[int] | None = None,
) -> dict[int, TrackerResult]:
    """
    Independent trackers for every sensor. Each sensor draws from its own
    random stream derived from (seed, sensor), so results do not depend on
    the worker count.
    """
    config = config or TdoaTrackerConfig()
    present = {s for by_sensor in stream.values() for s in by_sensor}
    unknown = sorted(s for s in present if not 0 <= s < geometry.n_sensors)
    if unknown:
        raise XWEchoGeometryError(f"Measurements reference sensors outside the geometry: {unknown}", sensor=unknown[0])
    indices = sorted(sensors) if sensors is not None else list(range(geometry.n_sensors))
    steps = range(min(stream), max(stream) + 1) if stream else []

    def work(index: int) -> tuple[int, TrackerResult]:
        rng = np.random.default_rng([seed, index])
        return index, track_sensor(stream, geometry.sensor(index), hp, config, step_length, rng, steps)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            results = dict(executor.map(work, indices))
    else:
        results = dict(work(i) for i in indices)
    return {i: results[i] for i in indices}
# ==============================================================================
# RE-EMISSION AND TABLES
# ==============================================================================


def tracks_to_measurement_sets(
    tracks: Iterable[Track],
    step_length: float = DEFAULT_STEP_LENGTH,
) -> list[TdoaMeasurementSet]:
    """One delay estimate per track and step; amplitude carries the existence."""
    grouped: dict[tuple[int, int], list[tuple[float, float]]] = {}
    for track in tracks:
        for step, state, existence in zip(track.steps, track.states, track.existences):
            grouped.setdefault((int(step), int(track.sensor or 0)), []).append((float(state[0]), float(existence)))
    return [
        TdoaMeasurementSet(step, sensor, np.array([d for d, _ in rows]), np.array([r for _, r in rows]), step_length)
        for (step, sensor), rows in sorted(grouped.items())
    ]


def tdoa_tracks_to_frame(tracks: Iterable[Track]) -> pd.DataFrame:
    rows = [
        (int(track.sensor or 0), format_label(track.label), int(step), float(state[0]), float(state[1]), float(r))
        for track in sorted(tracks, key=lambda t: (t.sensor or 0, t.start, t.label))
        for step, state, r in zip(track.steps, track.states, track.existences)
    ]
    if not rows:
        return empty_table(TDOA_TRACK_COLUMNS)
    return pd.DataFrame(rows, columns=list(TDOA_TRACK_COLUMNS))


def write_tdoa_tracks(path: str | Path, tracks: Iterable[Track]) -> Path:
    """Write sensor,label,step,delay_s,delay_rate,existence."""
    return write_table(tdoa_tracks_to_frame(tracks), path)


def collect_tracks(results: Mapping[int, TrackerResult]) -> list[Track]:
    return sort_tracks([t for result in results.values() for t in result.tracks])
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "CvMotionModel",
    "cv_predict",
    "tdoa_likelihood",
    "TdoaMeasurementModel",
    "track_sensor",
    "track_all_sensors",
    "tracks_to_measurement_sets",
    "tdoa_tracks_to_frame",
    "write_tdoa_tracks",
    "collect_tracks",
]
