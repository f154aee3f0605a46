#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/sim/baselines.py
Genie-aided reference trackers that know which measurements each whale
produced: non-sequential localization (NST) and a single Bernoulli
tracker (SBT).
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
from scipy.optimize import least_squares
from exonware.xwsystem import get_logger
from ..config import MttHyperparams, Tracker3dConfig
from ..defs import DEFAULT_STEP_LENGTH, FloatArray, MeasurementStream, NstMode
from ..errors import XWEchoNumericalError
from ..mtt import Track
from ..tracking import ArrayGeometry, estimate_doa, predict_tdoa_batch, track_3d, triangulate
logger = get_logger(__name__)
_MIN_TDOAS = 4


def _doa_fix(by_sensor: dict[int, FloatArray], geometry: ArrayGeometry) -> FloatArray | None:
    rays = []
    for a in range(len(geometry.arrays)):
        delays = [
            float(by_sensor[s.index][0]) if s.index in by_sensor and by_sensor[s.index].size else np.nan
            for s in geometry.sensors_of_array(a)
        ]
        doa = estimate_doa(delays, geometry, a)
        if doa is not None:
            rays.append(doa)
    if len(rays) < 2:
        return None
    try:
        return triangulate(rays)
    except XWEchoNumericalError:
        return None


def localize(
    by_sensor: dict[int, FloatArray],
    geometry: ArrayGeometry,
    noise_std: float,
    initial: FloatArray,
) -> FloatArray | None:
    """Weighted least-squares position from one delay per sensor; None below four delays."""
    sensors = [s for s, d in sorted(by_sensor.items()) if d.size]
    if len(sensors) < _MIN_TDOAS:
        return None
    observed = np.array([float(by_sensor[s][0]) for s in sensors])
    sigma = noise_std if noise_std > 0.0 else 1e-6

    def residual(p: FloatArray) -> FloatArray:
        return np.array([predict_tdoa_batch(p[None, :], geometry.sensor(s))[0] for s in sensors]) - observed

    fit = least_squares(lambda p: residual(p) / sigma, np.asarray(initial, dtype=float), method="lm")
    return fit.x


def run_nst(
    stream: MeasurementStream,
    geometry: ArrayGeometry,
    noise_std: float,
    steps: range | list[int],
    mode: NstMode = NstMode.TDOA,
    step_length: float = DEFAULT_STEP_LENGTH,
    label: tuple[int, int, int] = (0, -1, 0),
    initial: FloatArray | None = None,
) -> Track | None:
    """
    Per-step localization of one whale from its own measurements; missed
    steps between resolved steps are interpolated linearly, steps before the
    first or after the last resolved step stay missing.
    """
    fallback = np.array([0.0, 0.0, -1150.0]) if initial is None else np.asarray(initial, dtype=float)
    previous: FloatArray | None = None
    resolved: dict[int, FloatArray] = {}
    for step in steps:
        by_sensor = stream.get(step, {})
        guess = _doa_fix(by_sensor, geometry)
        if mode is NstMode.DOA:
            if guess is not None:
                resolved[step] = guess
            continue
        if guess is not None and np.all(np.isfinite(guess)):
            start = guess
        else:
            start = previous if previous is not None else fallback
        fix = localize(by_sensor, geometry, noise_std, start)
        if fix is not None:
            resolved[step] = fix
            previous = fix
    if not resolved:
        return None
    known = np.array(sorted(resolved))
    span = np.arange(known[0], known[-1] + 1)
    positions = np.column_stack(
        [np.interp(span, known, [resolved[k][axis] for k in known]) for axis in range(3)]
    )
    velocity = np.gradient(positions, step_length, axis=0) if len(span) > 1 else np.zeros_like(positions)
    states = np.hstack([positions, velocity])
    return Track(label, span.astype(np.int64), states, np.ones(len(span)))


def run_sbt(
    stream: MeasurementStream,
    geometry: ArrayGeometry,
    hp: MttHyperparams,
    config: Tracker3dConfig | None = None,
    step_length: float = DEFAULT_STEP_LENGTH,
    rng: np.random.Generator | None = None,
    steps: range | list[int] | None = None,
    label: tuple[int, int, int] = (0, -2, 0),
) -> Track | None:
    """
    Single-target tracking of one whale's own measurements with the full
    clutter model; every confirmed segment is merged into one track.
    """
    config = config or Tracker3dConfig(apply_speed_pruning=False)
    result = track_3d(stream, geometry, hp, config, step_length, rng, single_target=True, steps=steps, min_length=1)
    if not result.tracks:
        return None
    merged: dict[int, tuple[FloatArray, float]] = {}
    for track in result.tracks:
        for step, state, r in zip(track.steps, track.states, track.existences):
            merged[int(step)] = (state, float(r))
    keys = sorted(merged)
    return Track(
        label,
        np.array(keys, dtype=np.int64),
        np.vstack([merged[k][0] for k in keys]),
        np.array([merged[k][1] for k in keys]),
    )
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "localize",
    "run_nst",
    "run_sbt",
]
