#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/signal/peaks.py
Click peak extraction from frame-wise GCC sequences.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from ..defs import DEFAULT_ECHO_WINDOW, DEFAULT_P_TDOA, DEFAULT_STRONG_PEAK
from ..tables import PEAK_COLUMNS, empty_table
from .spectral import GccFrames, GccSequence
logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class TdoaPeak:
    """One GCC peak: delay (s), amplitude, frame-centre time (s) and sensor."""
    time: float
    delay: float
    amplitude: float
    sensor: int = 0


def extract_tdoa_peaks(
    gcc_frames: GccFrames | Sequence[GccSequence],
    threshold: float = DEFAULT_P_TDOA,
    sensor: int | None = None,
    strong_peak_level: float = DEFAULT_STRONG_PEAK,
    echo_window: float = DEFAULT_ECHO_WINDOW,
    max_delay: float | None = None,
    subsample: bool = False,
) -> list[TdoaPeak]:
    """
    Emit every local maximum above threshold with |delay| <= max_delay.
    Frames are visited in time order. A frame holding a peak above
    strong_peak_level opens an echo window: frames starting within
    echo_window seconds after it contribute nothing.
    Args:
        gcc_frames: Stacked frames or a sequence of GCC sequences
        threshold: Detection threshold (strict)
        sensor: Sensor index stamped on the peaks (defaults to the frames' sensor)
        strong_peak_level: Level that triggers echo suppression
        echo_window: Suppression length, seconds
        max_delay: Physical delay limit T_max of the sensor
        subsample: Parabolic refinement of the peak lag
    Returns:
        Peaks sorted by time then delay
    """
    frames = gcc_frames if isinstance(gcc_frames, GccFrames) else GccFrames.stack(list(gcc_frames))
    if len(frames) == 0:
        return []
    sensor = frames.sensor if sensor is None else sensor
    values = frames.values
    lags = frames.lags
    order = np.argsort(frames.times, kind="stable")
    padded = np.pad(values, ((0, 0), (1, 1)), constant_values=-np.inf)
    centre = padded[:, 1:-1]
    is_peak = (centre > padded[:, :-2]) & (centre >= padded[:, 2:]) & (centre > threshold)
    if max_delay is not None:
        max_lag = max_delay * frames.fs + 1e-9
        is_peak &= (np.abs(lags) <= max_lag)[None, :]
    candidates = np.flatnonzero(is_peak.any(axis=1))
    if candidates.size == 0:
        return []
    candidate_set = set(candidates.tolist())
    peaks: list[TdoaPeak] = []
    suppressed_until = -np.inf
    suppressed = 0
    for i in order.tolist():
        if i not in candidate_set:
            continue
        t = float(frames.times[i])
        if t <= suppressed_until:
            suppressed += 1
            continue
        idx = np.flatnonzero(is_peak[i])
        for j in idx.tolist():
            delay = float(lags[j]) / frames.fs
            if subsample:
                delay = _parabolic_delay(padded[i], j, float(lags[j]), frames.fs, max_delay)
            peaks.append(TdoaPeak(t, delay, float(values[i, j]), int(sensor)))
        if values[i, idx].max() > strong_peak_level:
            suppressed_until = t + echo_window
    if suppressed:
        logger.debug(f"Echo window suppressed {suppressed} frames on sensor {sensor}")
    return sorted(peaks)


def _parabolic_delay(row: np.ndarray, j: int, lag: float, fs: float, max_delay: float | None) -> float:
    left, mid, right = row[j], row[j + 1], row[j + 2]
    if not (np.isfinite(left) and np.isfinite(right)):
        return lag / fs
    curvature = left - 2.0 * mid + right
    shift = 0.0 if curvature == 0.0 else 0.5 * (left - right) / curvature
    delay = (lag + float(np.clip(shift, -0.5, 0.5))) / fs
    if max_delay is not None:
        delay = float(np.clip(delay, -max_delay, max_delay))
    return delay


def peaks_to_frame(peaks: Sequence[TdoaPeak]) -> pd.DataFrame:
    """Peaks as a table with columns sensor,time_s,delay_s,amplitude."""
    if not peaks:
        return empty_table(PEAK_COLUMNS)
    return pd.DataFrame(
        {
            "sensor": [p.sensor for p in peaks],
            "time_s": [p.time for p in peaks],
            "delay_s": [p.delay for p in peaks],
            "amplitude": [p.amplitude for p in peaks],
        }
    )


def peaks_from_frame(frame: pd.DataFrame) -> list[TdoaPeak]:
    return [
        TdoaPeak(float(t), float(d), float(a), int(s))
        for s, t, d, a in zip(frame["sensor"], frame["time_s"], frame["delay_s"], frame["amplitude"])
    ]
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "TdoaPeak",
    "extract_tdoa_peaks",
    "peaks_to_frame",
    "peaks_from_frame",
]
