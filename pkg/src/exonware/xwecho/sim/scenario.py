#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/sim/scenario.py
Ground-truth whale trajectories and TDOA measurement synthesis with missed
detections, clutter and a ledger of measurement origins.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterable, Sequence
import numpy as np
from exonware.xwsystem import get_logger
from ..config import MttHyperparams, ScenarioConfig
from ..defs import DEFAULT_STEP_LENGTH, FloatArray, IntArray, MeasurementStream
from ..measurements import TdoaMeasurementSet
from ..tracking import ArrayGeometry, KinematicMotionModel, predict_tdoa_batch
logger = get_logger(__name__)
CLUTTER = -1
"""Ledger origin of a false positive."""


@dataclass
class WhaleTruth:
    """True states (len(steps), 6) of one whale over its presence interval."""
    index: int
    steps: IntArray
    states: FloatArray

    @property
    def birth_step(self) -> int:
        return int(self.steps[0])

    @property
    def death_step(self) -> int:
        return int(self.steps[-1])

    def present(self, step: int) -> bool:
        return self.birth_step <= step <= self.death_step

    def state_at(self, step: int) -> FloatArray:
        return self.states[step - self.birth_step]


@dataclass
class GroundTruth:
    whales: list[WhaleTruth]
    n_steps: int
    step_length: float = DEFAULT_STEP_LENGTH

    def present(self, step: int) -> list[WhaleTruth]:
        return [w for w in self.whales if w.present(step)]


def generate_scenario(cfg: ScenarioConfig, rng: np.random.Generator | int | None = None) -> GroundTruth:
    """
    Whale i enters at step i * stagger on a circle around the arrays and
    moves by the kinematic model for presence_length steps.
    """
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    motion = KinematicMotionModel(cfg.hp.driving_std)
    whales: list[WhaleTruth] = []
    for i in range(cfg.n_whales):
        angle = rng.uniform(0.0, 2.0 * np.pi)
        state = np.empty((1, 6))
        state[0, :3] = (cfg.start_radius * np.cos(angle), cfg.start_radius * np.sin(angle), -cfg.start_depth)
        state[0, 3:] = rng.normal(0.0, cfg.initial_speed_std, size=3)
        states = [state[0].copy()]
        for _ in range(cfg.presence_length - 1):
            state = motion.propagate(state, cfg.step_length, rng)
            if state[0, 2] >= 0.0:
                state[0, 2] = -state[0, 2] - 1.0
                state[0, 5] = -state[0, 5]
            states.append(state[0].copy())
        birth = i * cfg.stagger
        whales.append(WhaleTruth(i, np.arange(birth, birth + cfg.presence_length), np.vstack(states)))
    logger.debug(f"Generated {len(whales)} whale trajectories")
    return GroundTruth(whales, cfg.n_steps, cfg.step_length)


@dataclass
class SyntheticMeasurements:
    """
    Measurement stream with the origin of every delay: whale index, or
    CLUTTER for false positives. origins[(step, sensor)] aligns with the
    sorted delays of stream[step][sensor].
    """
    stream: MeasurementStream
    origins: dict[tuple[int, int], IntArray] = field(default_factory=dict)

    def whale_stream(self, whale: int) -> MeasurementStream:
        """Only the measurements a given whale produced."""
        out: MeasurementStream = {}
        for step, by_sensor in self.stream.items():
            for sensor, delays in by_sensor.items():
                mask = self.origins[(step, sensor)] == whale
                if mask.any():
                    out.setdefault(step, {})[sensor] = delays[mask]
        return out

    def to_sets(self, step_length: float = DEFAULT_STEP_LENGTH) -> list[TdoaMeasurementSet]:
        return [
            TdoaMeasurementSet(step, sensor, delays, np.ones(delays.size), step_length)
            for step, by_sensor in sorted(self.stream.items())
            for sensor, delays in sorted(by_sensor.items())
            if delays.size
        ]

    def detection_count(self) -> int:
        return int(sum(np.count_nonzero(o != CLUTTER) for o in self.origins.values()))

    def clutter_count(self) -> int:
        return int(sum(np.count_nonzero(o == CLUTTER) for o in self.origins.values()))


def synthesize_measurements(
    truth: GroundTruth,
    geometry: ArrayGeometry,
    hp: MttHyperparams,
    rng: np.random.Generator | int | None = None,
    sensors: Iterable[int] | None = None,
) -> SyntheticMeasurements:
    """
    Each present whale is detected with probability p_d per sensor and step;
    detections are the model delay plus Gaussian noise, clipped to the
    sensor's delay range. Poisson(mu_fp) false positives are uniform on
    [-T_max, T_max].
    """
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    indices: Sequence[int] = list(sensors) if sensors is not None else list(range(geometry.n_sensors))
    stream: MeasurementStream = {}
    origins: dict[tuple[int, int], IntArray] = {}
    for step in range(truth.n_steps):
        present = truth.present(step)
        positions = np.array([w.state_at(step) for w in present]).reshape(len(present), 6)
        for s in indices:
            sensor = geometry.sensor(s)
            detected = rng.random(len(present)) < hp.detection_probability
            delays = predict_tdoa_batch(positions[detected], sensor) if detected.any() else np.zeros(0)
            if hp.measurement_std > 0.0:
                delays = delays + rng.normal(0.0, hp.measurement_std, size=delays.size)
            delays = np.clip(delays, -sensor.max_delay, sensor.max_delay)
            n_clutter = rng.poisson(hp.mean_false_positives)
            clutter = rng.uniform(-sensor.max_delay, sensor.max_delay, size=n_clutter)
            values = np.concatenate([delays, clutter])
            origin = np.concatenate(
                [np.array([w.index for w, d in zip(present, detected) if d], dtype=np.int64),
                 np.full(n_clutter, CLUTTER, dtype=np.int64)]
            )
            order = np.argsort(values, kind="stable")
            stream.setdefault(step, {})[s] = values[order]
            origins[(step, s)] = origin[order]
    synth = SyntheticMeasurements(stream, origins)
    logger.debug(f"Synthesized {synth.detection_count()} detections and {synth.clutter_count()} false positives")
    return synth
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "CLUTTER",
    "WhaleTruth",
    "GroundTruth",
    "generate_scenario",
    "SyntheticMeasurements",
    "synthesize_measurements",
]
