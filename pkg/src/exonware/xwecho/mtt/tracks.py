#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/mtt/tracks.py
Track assembly from per-step potential-target estimates.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence
import numpy as np
from exonware.xwsystem import get_logger
from ..defs import FloatArray, IntArray, Label
from .targets import PotentialTarget, format_label
logger = get_logger(__name__)


@dataclass
class Track:
    """
    Estimated states of one labeled target over consecutive steps.
    states has shape (len(steps), dim).
    """
    label: Label
    steps: IntArray
    states: FloatArray
    existences: FloatArray
    sensor: int | None = None

    def __len__(self) -> int:
        return int(len(self.steps))

    @property
    def name(self) -> str:
        return format_label(self.label)

    @property
    def start(self) -> int:
        return int(self.steps[0])

    @property
    def end(self) -> int:
        return int(self.steps[-1])

    def state_at(self, step: int) -> FloatArray | None:
        idx = np.flatnonzero(self.steps == step)
        return self.states[idx[0]] if idx.size else None


class TrackBuilder:
    """
    Records every potential target at every step and turns the history into
    tracks. A label is confirmed at the steps where its existence exceeds the
    threshold; its track runs from its first recorded step to its last
    confirmed step, so low-existence steps in between are kept.
    """

    def __init__(self, sensor: int | None = None):
        self.sensor = sensor
        self._history: dict[Label, list[tuple[int, FloatArray, float]]] = defaultdict(list)

    def record(self, step: int, pts: Iterable[PotentialTarget]) -> None:
        for pt in pts:
            self._history[pt.label].append((int(step), pt.mean(), pt.existence))

    def labels(self) -> list[Label]:
        return sorted(self._history)

    def build(self, min_length: int = 1, threshold: float = 0.5) -> list[Track]:
        tracks: list[Track] = []
        for label in self.labels():
            history = self._history[label]
            confirmed = [i for i, (_, _, r) in enumerate(history) if r > threshold]
            if not confirmed:
                continue
            kept = history[: confirmed[-1] + 1]
            if len(kept) < min_length:
                continue
            tracks.append(
                Track(
                    label,
                    np.array([s for s, _, _ in kept], dtype=np.int64),
                    np.vstack([x for _, x, _ in kept]),
                    np.array([r for _, _, r in kept]),
                    self.sensor,
                )
            )
        logger.debug(f"Built {len(tracks)} tracks from {len(self._history)} labels")
        return tracks


def sort_tracks(tracks: Sequence[Track]) -> list[Track]:
    """Tracks ordered by start step then label."""
    return sorted(tracks, key=lambda t: (t.start, t.label))
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "Track",
    "TrackBuilder",
    "sort_tracks",
]
