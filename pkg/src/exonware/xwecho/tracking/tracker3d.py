#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/tracking/tracker3d.py
Second tracking stage: 3-D positions and velocities from the TDOA
estimates of all sensors. Sensors update the targets one after another
within a step; particles migrate by particle flow before reweighting.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from pathlib import Path
from typing import Iterable, Sequence
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from ..base import AMeasurementModel, AMotionModel
from ..config import MttHyperparams, Tracker3dConfig
from ..contracts import IMeasurementFunction
from ..defs import DEFAULT_STEP_LENGTH, FloatArray, MeasurementStream
from ..errors import XWEchoGeometryError, XWEchoValidationError
from ..mtt import FlowResult, FlowSettings, Track, TrackerResult, edh_flow, format_label, run_tracker
from ..tables import (
    TDOA_PROJECTION_COLUMNS,
    TRACK3D_COLUMNS,
    TRAJECTORY_COLUMNS,
    empty_table,
    write_table,
)
from .geometry import ArrayGeometry, SensorGeometry, TdoaFunction, predict_tdoa_batch
logger = get_logger(__name__)
_MIN_SENSORS = 4
# ==============================================================================
# MOTION
# ==============================================================================


class KinematicMotionModel(AMotionModel):
    """
    Near-constant velocity in 3-D: p' = p + T v + T^2/2 w, v' = v + w with
    w ~ N(0, sigma_w^2 I). States at or above the surface have no mass.
    """

    @property
    def dim(self) -> int:
        return 6

    def transition(self, dt: float) -> FloatArray:
        f = np.eye(6)
        f[:3, 3:] = dt * np.eye(3)
        return f

    def noise_covariance(self, dt: float) -> FloatArray:
        gain = np.vstack([0.5 * dt**2 * np.eye(3), np.eye(3)])
        return self.driving_std**2 * gain @ gain.T

    def admissible(self, particles: FloatArray) -> np.ndarray:
        return particles[:, 2] < 0.0


def kinematic_predict(
    state: FloatArray,
    step_length: float,
    driving_std: float,
    rng: np.random.Generator | None = None,
) -> FloatArray:
    return KinematicMotionModel(driving_std).predict_state(state, step_length, rng)
# ==============================================================================
# BIRTHS
# ==============================================================================


class BirthRegionSampler:
    """
    Uniform samples of the birth box, redrawn once per step and shared by all
    sensors. A new target's positions are the pool samples whose delay is
    consistent with the measurement.
    """

    def __init__(
        self,
        box: Sequence[Sequence[float]],
        pool_size: int = 300_000,
        velocity_std: float = 1.0,
    ):
        self.box = np.asarray(box, dtype=float)
        if self.box.shape != (3, 2) or np.any(self.box[:, 1] <= self.box[:, 0]):
            raise XWEchoValidationError("Birth box needs (low, high) per axis", field="birth_box", value=box)
        if self.box[2, 0] >= 0.0:
            raise XWEchoValidationError("Birth box must lie below the surface", field="birth_box", value=box)
        self.pool_size = int(pool_size)
        self.velocity_std = float(velocity_std)
        self.pool = np.empty((0, 3))
        self._step: int | None = None
        self._sorted: dict[int, tuple[FloatArray, np.ndarray]] = {}

    @property
    def center(self) -> FloatArray:
        return self.box.mean(axis=1)

    def begin_step(self, step: int, rng: np.random.Generator) -> None:
        if step == self._step and len(self.pool):
            return
        low, high = self.box[:, 0], self.box[:, 1]
        self.pool = rng.uniform(low, high, size=(self.pool_size, 3))
        # Surface excluded even if the box touches it.
        self.pool[:, 2] = np.minimum(self.pool[:, 2], -np.finfo(float).eps)
        self._sorted.clear()
        self._step = step

    def _delays(self, sensor: SensorGeometry) -> tuple[FloatArray, np.ndarray]:
        if sensor.index not in self._sorted:
            delays = predict_tdoa_batch(self.pool, sensor)
            order = np.argsort(delays, kind="stable")
            self._sorted[sensor.index] = (delays[order], order)
        return self._sorted[sensor.index]

    def sample(
        self,
        sensor: SensorGeometry,
        z: float,
        noise_std: float,
        n: int,
        rng: np.random.Generator,
    ) -> tuple[FloatArray, float]:
        """Birth particles (n, 6) for measurement z and the evidence mean_x N(z; d(x), sigma^2)."""
        if not len(self.pool):
            self.begin_step(0 if self._step is None else self._step, rng)
        delays, order = self._delays(sensor)
        lo, hi = np.searchsorted(delays, [z - 5.0 * noise_std, z + 5.0 * noise_std])
        residual = (delays[lo:hi] - z) / noise_std
        kernel = np.exp(-0.5 * residual**2)
        evidence = float(kernel.sum() / (noise_std * np.sqrt(2.0 * np.pi) * len(self.pool)))
        candidates = order[lo:hi]
        accepted = candidates[rng.random(candidates.size) < kernel]
        if accepted.size >= n:
            picked = rng.choice(accepted, size=n, replace=False)
        elif accepted.size > 0:
            picked = rng.choice(accepted, size=n, replace=True)
        elif candidates.size > 0:
            picked = rng.choice(candidates, size=n, replace=True, p=kernel / kernel.sum())
        else:
            picked = rng.integers(0, len(self.pool), size=n)
        particles = np.empty((n, 6))
        particles[:, :3] = self.pool[picked]
        particles[:, 3:] = rng.normal(0.0, self.velocity_std, size=(n, 3))
        return particles, evidence
# ==============================================================================
# MEASUREMENT MODEL
# ==============================================================================


class Tdoa3dMeasurementModel(AMeasurementModel):
    """Delay of one sensor as a nonlinear function of the 3-D state."""

    def __init__(
        self,
        geometry: SensorGeometry,
        noise_std: float,
        sampler: BirthRegionSampler,
        flow: bool = True,
    ):
        super().__init__(geometry.index, geometry.max_delay, noise_std)
        self.geometry = geometry
        self.sampler = sampler
        self._function = TdoaFunction(geometry) if flow else None

    def predict_measurement(self, particles: FloatArray) -> FloatArray:
        return predict_tdoa_batch(particles, self.geometry)

    def sample_birth(self, z: float, n: int, rng: np.random.Generator) -> tuple[FloatArray, float]:
        return self.sampler.sample(self.geometry, z, self.noise_std, n, rng)

    def begin_step(self, step: int, rng: np.random.Generator) -> None:
        self.sampler.begin_step(step, rng)

    def flow_function(self) -> IMeasurementFunction | None:
        return self._function


def particle_flow_update(
    particles: FloatArray,
    measurement: float,
    sensor: SensorGeometry | IMeasurementFunction,
    sigma_b: float,
    weights: FloatArray | None = None,
    steps: int = 25,
    ratio: float = 1.2,
) -> FlowResult:
    """Migrate a 6-D cloud toward one delay measurement of a sensor."""
    function = TdoaFunction(sensor, np.atleast_2d(particles).shape[1]) if isinstance(sensor, SensorGeometry) else sensor
    return edh_flow(particles, measurement, function, sigma_b, weights, steps, ratio)
# ==============================================================================
# TRACKING
# ==============================================================================


def build_models(
    geometry: ArrayGeometry,
    hp: MttHyperparams,
    config: Tracker3dConfig,
    sensors: Sequence[int],
) -> dict[int, Tdoa3dMeasurementModel]:
    sampler = BirthRegionSampler(config.birth_box, config.birth_pool_size, config.birth_velocity_std)
    return {
        s: Tdoa3dMeasurementModel(geometry.sensor(s), hp.measurement_std, sampler, config.particle_flow)
        for s in sensors
    }


def track_3d(
    stream: MeasurementStream,
    geometry: ArrayGeometry,
    hp: MttHyperparams | None = None,
    config: Tracker3dConfig | None = None,
    step_length: float = DEFAULT_STEP_LENGTH,
    rng: np.random.Generator | None = None,
    single_target: bool = False,
    steps: Sequence[int] | None = None,
    min_length: int | None = None,
) -> TrackerResult:
    """
    Fuse the delay estimates of all configured sensors into 3-D tracks.
    Speed pruning is applied when the config asks for it.
    """
    hp = hp or MttHyperparams.tracking3d_default()
    config = config or Tracker3dConfig()
    sensors = list(config.sensor_order) if config.sensor_order is not None else list(range(geometry.n_sensors))
    if len(sensors) < _MIN_SENSORS:
        raise XWEchoValidationError(
            f"3-D tracking needs at least {_MIN_SENSORS} sensors, got {len(sensors)}", field="sensors", value=sensors
        )
    for by_sensor in stream.values():
        for s in by_sensor:
            if not 0 <= s < geometry.n_sensors:
                raise XWEchoGeometryError("Measurement sensor not in geometry", sensor=s)
    models = build_models(geometry, hp, config, sensors)
    motion = KinematicMotionModel(hp.driving_std)
    flow = FlowSettings(config.flow_steps, config.flow_step_ratio, config.flow_association_threshold)
    result = run_tracker(
        stream,
        motion,
        models,
        hp,
        step_length,
        rng,
        single_target=single_target,
        flow=flow if config.particle_flow else None,
        sensor_order=sensors,
        steps=steps,
        min_length=min_length,
    )
    if config.apply_speed_pruning:
        result.tracks = prune_tracks_speed(
            result.tracks, config.max_median_speed, config.max_step_speed, config.min_pruned_length
        )
    logger.info(f"3-D tracking kept {len(result.tracks)} tracks")
    return result


def prune_tracks_speed(
    tracks: Iterable[Track],
    max_median_speed: float = 2.0,
    max_step_speed: float = 3.5,
    min_length: int = 5,
) -> list[Track]:
    """
    Drop short tracks and tracks with an implausible median speed, then
    remove the individual states that are too fast.
    """
    kept: list[Track] = []
    for track in tracks:
        speed = np.linalg.norm(track.states[:, 3:6], axis=1)
        if len(track) < min_length or np.median(speed) > max_median_speed:
            continue
        ok = speed <= max_step_speed
        kept.append(Track(track.label, track.steps[ok], track.states[ok], track.existences[ok], track.sensor))
    return kept


def project_track_to_tdoa(
    track: Track,
    geometry: ArrayGeometry,
    sensors: Sequence[int] | None = None,
) -> pd.DataFrame:
    """Delays a 3-D track implies at each sensor."""
    sensors = range(geometry.n_sensors) if sensors is None else sensors
    rows = [
        (format_label(track.label), int(step), int(s), float(d))
        for s in sensors
        for step, d in zip(track.steps, predict_tdoa_batch(track.states, geometry.sensor(s)))
    ]
    if not rows:
        return empty_table(TDOA_PROJECTION_COLUMNS)
    return pd.DataFrame(rows, columns=list(TDOA_PROJECTION_COLUMNS))
# ==============================================================================
# TABLES
# ==============================================================================


def tracks3d_to_frame(tracks: Iterable[Track]) -> pd.DataFrame:
    rows = [
        (format_label(track.label), int(step), *map(float, state[:6]), float(r))
        for track in sorted(tracks, key=lambda t: (t.start, t.label))
        for step, state, r in zip(track.steps, track.states, track.existences)
    ]
    if not rows:
        return empty_table(TRACK3D_COLUMNS)
    return pd.DataFrame(rows, columns=list(TRACK3D_COLUMNS))


def trajectory_frame(tracks: Iterable[Track], step_length: float = DEFAULT_STEP_LENGTH) -> pd.DataFrame:
    """Long format (label, step, time_s, coordinate, value) for trajectory plots."""
    wide = tracks3d_to_frame(tracks)
    if wide.empty:
        return empty_table(TRAJECTORY_COLUMNS)
    wide["time_s"] = wide["step"] * step_length
    long = wide.melt(
        id_vars=["label", "step", "time_s"],
        value_vars=["x", "y", "z"],
        var_name="coordinate",
        value_name="value",
    )
    return long.sort_values(["label", "coordinate", "step"], kind="stable")[list(TRAJECTORY_COLUMNS)].reset_index(
        drop=True
    )


def write_tracks3d(path: str | Path, tracks: Iterable[Track]) -> Path:
    """Write label,step,x,y,z,vx,vy,vz,existence."""
    return write_table(tracks3d_to_frame(tracks), path)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "KinematicMotionModel",
    "kinematic_predict",
    "BirthRegionSampler",
    "Tdoa3dMeasurementModel",
    "particle_flow_update",
    "build_models",
    "track_3d",
    "prune_tracks_speed",
    "project_track_to_tdoa",
    "tracks3d_to_frame",
    "trajectory_frame",
    "write_tracks3d",
]
