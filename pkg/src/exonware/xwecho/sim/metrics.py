#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/sim/metrics.py
Track accuracy with a missed-estimate penalty, and track cardinality.
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
import pandas as pd
from scipy.optimize import linear_sum_assignment
from exonware.xwsystem import get_logger
from ..defs import DEFAULT_PENALTY, FloatArray, IntArray
from ..mtt import Track
from .scenario import GroundTruth, WhaleTruth
logger = get_logger(__name__)
STEP_ERROR_COLUMNS = ["whale", "step", "age", "error"]


@dataclass
class RmseResult:
    """
    Penalized errors of one run. step_errors has one row per whale and
    present step; assignment maps whale index to track index (or None).
    """
    rmse: float
    per_whale: dict[int, float]
    step_errors: pd.DataFrame
    assignment: dict[int, int | None] = field(default_factory=dict)


def _errors(whale: WhaleTruth, track: Track | None, penalty: float) -> FloatArray:
    errors = np.full(len(whale.steps), float(penalty))
    if track is None:
        return errors
    lookup = {int(s): i for i, s in enumerate(track.steps)}
    for i, step in enumerate(whale.steps):
        j = lookup.get(int(step))
        if j is not None:
            dist = float(np.linalg.norm(track.states[j, :3] - whale.states[i, :3]))
            errors[i] = min(dist, penalty)
    return errors


def rmse_with_penalty(
    tracks: Sequence[Track],
    truth: GroundTruth,
    penalty: float = DEFAULT_PENALTY,
) -> RmseResult:
    """
    Match tracks to whales by minimal summed per-step error (optimal
    assignment), then score every true step: distance to the matched
    estimate capped at the penalty, or the penalty when there is none.
    """
    whales = truth.whales
    cost = np.array([[_errors(w, t, penalty).sum() for t in tracks] for w in whales]).reshape(len(whales), len(tracks))
    assignment: dict[int, int | None] = {w.index: None for w in whales}
    if cost.size:
        rows, cols = linear_sum_assignment(cost)
        for r, c in zip(rows, cols):
            assignment[whales[r].index] = int(c)
    rows_out = []
    per_whale: dict[int, float] = {}
    for w in whales:
        t = assignment[w.index]
        errors = _errors(w, tracks[t] if t is not None else None, penalty)
        per_whale[w.index] = float(np.sqrt(np.mean(errors**2)))
        rows_out.extend((w.index, int(s), int(s - w.birth_step), float(e)) for s, e in zip(w.steps, errors))
    frame = pd.DataFrame(rows_out, columns=STEP_ERROR_COLUMNS)
    rmse = float(np.sqrt(np.mean(frame["error"].to_numpy() ** 2))) if len(frame) else 0.0
    return RmseResult(rmse, per_whale, frame, assignment)


def cardinality_stats(track_counts: Sequence[int], n_whales: int) -> float:
    """Fraction of runs with more confirmed tracks than whales."""
    counts = np.asarray(track_counts)
    if counts.size == 0:
        return 0.0
    return float(np.mean(counts > n_whales))


@dataclass
class TrackMatch:
    """Two paired tracks and their position distances on the steps both cover."""
    first: int
    second: int
    steps: IntArray
    distances: FloatArray


def _common(a: Track, b: Track) -> tuple[IntArray, FloatArray]:
    steps, ia, ib = np.intersect1d(a.steps, b.steps, return_indices=True)
    return steps, np.linalg.norm(a.states[ia, :3] - b.states[ib, :3], axis=1)


def match_tracks(
    first: Sequence[Track],
    second: Sequence[Track],
    penalty: float = DEFAULT_PENALTY,
) -> list[TrackMatch]:
    """
    Pair two track sets by optimal assignment. A pair costs its distances
    capped at the penalty, plus the penalty for every step only one of the
    two tracks covers. Pairs without a common step are dropped.
    """
    cost = np.zeros((len(first), len(second)))
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            steps, dist = _common(a, b)
            exclusive = np.union1d(a.steps, b.steps).size - steps.size
            cost[i, j] = np.minimum(dist, penalty).sum() + penalty * exclusive
    matches: list[TrackMatch] = []
    if cost.size:
        for i, j in zip(*linear_sum_assignment(cost)):
            steps, dist = _common(first[i], second[j])
            if steps.size:
                matches.append(TrackMatch(int(i), int(j), steps, dist))
    logger.debug(f"Matched {len(matches)} of {len(first)} and {len(second)} tracks")
    return matches
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "STEP_ERROR_COLUMNS",
    "RmseResult",
    "rmse_with_penalty",
    "cardinality_stats",
    "TrackMatch",
    "match_tracks",
]
