#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/mtt/engine.py
Sequential Bayesian multi-target tracking engine.
One engine step predicts all potential targets, then updates them with the
measurements of each sensor in turn, and finally declares detections.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping, Sequence
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from ..config import MttHyperparams
from ..contracts import IMeasurementModel, IMotionModel
from ..defs import FloatArray, MeasurementStream, TargetKind
from ..errors import XWEchoValidationError
from .association import association_update
from .flow import FlowSettings
from .targets import Detection, PotentialTarget, detect_and_estimate, predict, prune
from .tracks import Track, TrackBuilder
logger = get_logger(__name__)
_EMPTY = np.zeros(0)


@dataclass(frozen=True)
class StepDiagnostics:
    """Bookkeeping of one sensor update."""
    step: int
    sensor: int
    num_legacy: int
    num_new: int
    num_measurements: int
    spa_iterations: int
    converged: bool
    association_entropy: float


@dataclass
class TrackerResult:
    """Output of a tracking run."""
    tracks: list[Track]
    diagnostics: list[StepDiagnostics] = field(default_factory=list)
    detections: dict[int, list[Detection]] = field(default_factory=dict)

    def diagnostics_frame(self) -> pd.DataFrame:
        columns = list(StepDiagnostics.__dataclass_fields__)
        return pd.DataFrame([asdict(d) for d in self.diagnostics], columns=columns)


class MttEngine:
    """
    Particle-based tracker of an unknown number of targets.
    Measurement models are keyed by sensor; sensors are processed in
    ascending order unless an explicit order is given.
    """

    def __init__(
        self,
        motion: IMotionModel,
        models: Mapping[int, IMeasurementModel],
        hp: MttHyperparams,
        step_length: float,
        rng: np.random.Generator | None = None,
        single_target: bool = False,
        flow: FlowSettings | None = None,
        sensor_order: Sequence[int] | None = None,
    ):
        if not models:
            raise XWEchoValidationError("At least one measurement model is required", field="models")
        order = list(sensor_order) if sensor_order is not None else sorted(models)
        unknown = [s for s in order if s not in models]
        if unknown:
            raise XWEchoValidationError("Sensor order names unknown sensors", field="sensor_order", value=unknown)
        self.motion = motion
        self.models = dict(models)
        self.hp = hp
        self.step_length = float(step_length)
        self.rng = rng if rng is not None else np.random.default_rng()
        self.single_target = single_target
        self.flow = flow
        self.sensor_order = order
        self.pts: list[PotentialTarget] = []
        self.diagnostics: list[StepDiagnostics] = []
        self.last_step: int | None = None

    def seed(self, pts: Iterable[PotentialTarget]) -> None:
        """Start from known potential targets instead of an empty set."""
        self.pts.extend(pts)

    def _update_sensor(self, step: int, sensor: int, z: FloatArray) -> None:
        model = self.models[sensor]
        model.begin_step(step, self.rng)
        allow_births = not (self.single_target and self.pts)
        belief, legacy, new = association_update(
            self.pts, z, model, self.hp, step, self.rng, allow_births, self.flow
        )
        for pt in new:
            pt.kind = TargetKind.LEGACY
        self.pts = prune(legacy + new, self.hp.prune_threshold, self.hp.resample_ess_fraction, self.rng)
        self.diagnostics.append(
            StepDiagnostics(
                step,
                sensor,
                len(legacy),
                len(new),
                int(np.size(z)),
                belief.iterations,
                belief.converged,
                belief.entropy(),
            )
        )

    def step(self, step: int, measurements: Mapping[int, FloatArray]) -> list[Detection]:
        """
        Process one step; sensors without an entry have no measurements.
        Returns the detections of the step.
        """
        dt = self.step_length if self.last_step is None else self.step_length * (step - self.last_step)
        if self.pts:
            self.pts = predict(self.pts, self.motion, self.hp.survival_probability, dt, self.rng)
        for sensor in self.sensor_order:
            self._update_sensor(step, sensor, np.asarray(measurements.get(sensor, _EMPTY), dtype=float))
        self.last_step = step
        return detect_and_estimate(self.pts, self.hp.existence_threshold)


def run_tracker(
    stream: MeasurementStream,
    motion: IMotionModel,
    models: Mapping[int, IMeasurementModel],
    hp: MttHyperparams,
    step_length: float,
    rng: np.random.Generator | None = None,
    single_target: bool = False,
    flow: FlowSettings | None = None,
    sensor_order: Sequence[int] | None = None,
    initial: Iterable[PotentialTarget] = (),
    min_length: int | None = None,
    steps: Sequence[int] | None = None,
) -> TrackerResult:
    """
    Run the engine over every step from the first to the last key of the
    stream (or over the explicit steps) and assemble the tracks.
    """
    engine = MttEngine(motion, models, hp, step_length, rng, single_target, flow, sensor_order)
    engine.seed(initial)
    if steps is None:
        steps = range(min(stream), max(stream) + 1) if stream else []
    builder = TrackBuilder(sensor=next(iter(models)) if len(models) == 1 else None)
    detections: dict[int, list[Detection]] = {}
    for k in steps:
        detections[k] = engine.step(k, stream.get(k, {}))
        builder.record(k, engine.pts)
    min_length = hp.min_track_length if min_length is None else min_length
    tracks = builder.build(min_length, hp.existence_threshold)
    logger.info(f"Tracker produced {len(tracks)} tracks over {len(detections)} steps")
    return TrackerResult(tracks, engine.diagnostics, detections)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "StepDiagnostics",
    "TrackerResult",
    "MttEngine",
    "run_tracker",
]
