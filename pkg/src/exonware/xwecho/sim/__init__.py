"""
#exonware/xwecho/src/exonware/xwecho/sim/__init__.py
Simulation: ground truth, measurement synthesis, baseline trackers,
metrics, the Monte-Carlo study and waveform fixtures.
"""

from .scenario import (
    CLUTTER,
    GroundTruth,
    SyntheticMeasurements,
    WhaleTruth,
    generate_scenario,
    synthesize_measurements,
)
from .metrics import RmseResult, TrackMatch, cardinality_stats, match_tracks, rmse_with_penalty
from .baselines import localize, run_nst, run_sbt
from .study import RunOutcome, StudyResult, run_once, run_study, summarize
from .waveform import ClickSource, HarmonicNoise, gabor_click, render_channels
__all__ = [
    "CLUTTER",
    "GroundTruth",
    "SyntheticMeasurements",
    "WhaleTruth",
    "generate_scenario",
    "synthesize_measurements",
    "RmseResult",
    "cardinality_stats",
    "TrackMatch",
    "match_tracks",
    "rmse_with_penalty",
    "localize",
    "run_nst",
    "run_sbt",
    "RunOutcome",
    "StudyResult",
    "run_once",
    "run_study",
    "summarize",
    "ClickSource",
    "HarmonicNoise",
    "gabor_click",
    "render_channels",
]
