#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/measurements.py
TDOA measurement formation.
Peaks are accumulated over tracking steps of length T_M and clustered per
sensor so that a source yields at most one measurement per sensor and step.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from .defs import FloatArray, MeasurementStream, DEFAULT_CLUSTER_SAMPLES, DEFAULT_STEP_LENGTH
from .errors import XWEchoValidationError
from .signal.peaks import TdoaPeak
from .tables import MEASUREMENT_COLUMNS, empty_table, read_table, write_table
logger = get_logger(__name__)
# ==============================================================================
# DOMAIN TYPE
# ==============================================================================


@dataclass
class TdoaMeasurementSet:
    """Measurements of one sensor in one step, sorted by delay."""
    step: int
    sensor: int
    delays: FloatArray = field(default_factory=lambda: np.zeros(0))
    amplitudes: FloatArray = field(default_factory=lambda: np.zeros(0))
    step_length: float = DEFAULT_STEP_LENGTH

    def __post_init__(self) -> None:
        delays = np.asarray(self.delays, dtype=float).ravel()
        amplitudes = np.asarray(self.amplitudes, dtype=float).ravel()
        if amplitudes.size == 0 and delays.size:
            amplitudes = np.ones_like(delays)
        if amplitudes.size != delays.size:
            raise XWEchoValidationError("delays and amplitudes differ in length", field="amplitudes")
        order = np.argsort(delays, kind="stable")
        self.delays = delays[order]
        self.amplitudes = amplitudes[order]

    def __len__(self) -> int:
        return int(self.delays.size)
# ==============================================================================
# ACCUMULATION AND CLUSTERING
# ==============================================================================


def accumulate(peaks: Iterable[TdoaPeak], step_length: float = DEFAULT_STEP_LENGTH) -> dict[int, list[TdoaPeak]]:
    """Group peaks into half-open steps k = floor(t / T_M), in step order."""
    if step_length <= 0.0:
        raise XWEchoValidationError("Step length must be positive", field="step_length", value=step_length)
    groups: dict[int, list[TdoaPeak]] = defaultdict(list)
    for peak in peaks:
        groups[int(np.floor(peak.time / step_length))].append(peak)
    return {k: groups[k] for k in sorted(groups)}


def _split_at_minima(members: list[TdoaPeak], fs: float) -> list[list[TdoaPeak]]:
    """Split a delay-sorted chain after every strict interior minimum of its amplitude profile."""
    keys = [int(round(p.delay * fs * 1e6)) for p in members]
    unique: list[int] = []
    profile: list[float] = []
    for key, peak in zip(keys, members):
        if unique and unique[-1] == key:
            profile[-1] = max(profile[-1], peak.amplitude)
        else:
            unique.append(key)
            profile.append(peak.amplitude)
    cut_after = {
        unique[i]
        for i in range(1, len(profile) - 1)
        if profile[i] < profile[i - 1] and profile[i] < profile[i + 1]
    }
    if not cut_after:
        return [members]
    parts: list[list[TdoaPeak]] = [[]]
    for i, (key, peak) in enumerate(zip(keys, members)):
        parts[-1].append(peak)
        last_of_key = i + 1 == len(members) or keys[i + 1] != key
        if key in cut_after and last_of_key:
            parts.append([])
    return [p for p in parts if p]


def cluster_and_merge(
    peaks: Sequence[TdoaPeak],
    cluster_samples: int = DEFAULT_CLUSTER_SAMPLES,
    fs: float = 100_000.0,
    step: int = 0,
    sensor: int | None = None,
    step_length: float = DEFAULT_STEP_LENGTH,
) -> TdoaMeasurementSet:
    """
    Reduce one step's peaks of one sensor to measurements.
    Peaks whose delays differ by at most cluster_samples chain into a large
    cluster, which is split at strict local minima of amplitude over delay.
    Each resulting cluster becomes one measurement: amplitude-weighted mean
    delay and maximum amplitude.
    """
    if sensor is None:
        sensor = peaks[0].sensor if peaks else 0
    if any(p.sensor != sensor for p in peaks):
        raise XWEchoValidationError("Peaks from several sensors passed to one cluster run", field="sensor")
    ordered = sorted(peaks, key=lambda p: (p.delay, p.amplitude, p.time))
    gap = (cluster_samples + 1e-6) / fs
    chains: list[list[TdoaPeak]] = []
    for peak in ordered:
        if chains and peak.delay - chains[-1][-1].delay <= gap:
            chains[-1].append(peak)
        else:
            chains.append([peak])
    delays: list[float] = []
    amplitudes: list[float] = []
    for chain in chains:
        for cluster in _split_at_minima(chain, fs):
            a = np.array([p.amplitude for p in cluster])
            d = np.array([p.delay for p in cluster])
            weight = a.sum()
            merged = float((a * d).sum() / weight) if weight > 0 else float(d.mean())
            delays.append(float(np.clip(merged, d.min(), d.max())))
            amplitudes.append(float(a.max()))
    return TdoaMeasurementSet(step, int(sensor), np.array(delays), np.array(amplitudes), step_length)


def build_measurement_sets(
    peaks: Iterable[TdoaPeak],
    step_length: float = DEFAULT_STEP_LENGTH,
    cluster_samples: int = DEFAULT_CLUSTER_SAMPLES,
    fs: float = 100_000.0,
) -> list[TdoaMeasurementSet]:
    """Accumulate and cluster peaks of all sensors; sets ordered by step then sensor."""
    sets: list[TdoaMeasurementSet] = []
    for step, group in accumulate(peaks, step_length).items():
        by_sensor: dict[int, list[TdoaPeak]] = defaultdict(list)
        for peak in group:
            by_sensor[peak.sensor].append(peak)
        for sensor in sorted(by_sensor):
            sets.append(cluster_and_merge(by_sensor[sensor], cluster_samples, fs, step, sensor, step_length))
    logger.debug(f"Formed {sum(len(s) for s in sets)} measurements in {len(sets)} sensor-steps")
    return sets
# ==============================================================================
# STREAMS
# ==============================================================================


def stream_from_sets(sets: Iterable[TdoaMeasurementSet]) -> MeasurementStream:
    """Measurement stream keyed by step then sensor."""
    stream: MeasurementStream = {}
    for s in sets:
        stream.setdefault(int(s.step), {})[int(s.sensor)] = np.asarray(s.delays, dtype=float)
    return {k: stream[k] for k in sorted(stream)}


def sets_from_stream(stream: MeasurementStream, step_length: float = DEFAULT_STEP_LENGTH) -> list[TdoaMeasurementSet]:
    return [
        TdoaMeasurementSet(step, sensor, delays, step_length=step_length)
        for step in sorted(stream)
        for sensor, delays in sorted(stream[step].items())
    ]


def reverse_measurement_stream(stream: MeasurementStream) -> MeasurementStream:
    """Mirror step indices so the last step is processed first."""
    if not stream:
        return {}
    first, last = min(stream), max(stream)
    return {first + last - k: stream[k] for k in sorted(stream, reverse=True)}
# ==============================================================================
# TABLES
# ==============================================================================


def measurements_to_frame(sets: Iterable[TdoaMeasurementSet]) -> pd.DataFrame:
    rows = [
        (s.step, s.sensor, float(d), float(a))
        for s in sets
        for d, a in zip(s.delays, s.amplitudes)
    ]
    if not rows:
        return empty_table(MEASUREMENT_COLUMNS)
    return pd.DataFrame(rows, columns=list(MEASUREMENT_COLUMNS))


def measurements_from_frame(frame: pd.DataFrame, step_length: float = DEFAULT_STEP_LENGTH) -> list[TdoaMeasurementSet]:
    sets: list[TdoaMeasurementSet] = []
    for (step, sensor), group in frame.groupby(["step", "sensor"], sort=True):
        sets.append(
            TdoaMeasurementSet(
                int(step), int(sensor), group["delay_s"].to_numpy(), group["amplitude"].to_numpy(), step_length
            )
        )
    return sets


def write_measurements(path: str | Path, sets: Iterable[TdoaMeasurementSet]) -> Path:
    """Write step,sensor,delay_s,amplitude."""
    return write_table(measurements_to_frame(sets), path)


def read_measurements(path: str | Path, step_length: float = DEFAULT_STEP_LENGTH) -> list[TdoaMeasurementSet]:
    """Read a measurement table; schema errors carry the offending line."""
    return measurements_from_frame(read_table(path, MEASUREMENT_COLUMNS), step_length)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "TdoaMeasurementSet",
    "accumulate",
    "cluster_and_merge",
    "build_measurement_sets",
    "stream_from_sets",
    "sets_from_stream",
    "reverse_measurement_stream",
    "measurements_to_frame",
    "measurements_from_frame",
    "write_measurements",
    "read_measurements",
]
