"""
#exonware/xwecho/src/exonware/xwecho/mtt/__init__.py
Multi-target tracking core: potential targets, data association, particle
flow, the tracking engine and track assembly.
"""

from .targets import (
    Detection,
    PotentialTarget,
    detect_and_estimate,
    format_label,
    parse_label,
    predict,
    prune,
    systematic_resample,
)
from .flow import FlowResult, FlowSettings, edh_flow, gaussian_fit, gaussian_logpdf, pseudo_time_steps
from .association import (
    AssociationBelief,
    association_update,
    count_events,
    solve_association,
    solve_exact,
    solve_spa,
)
from .tracks import Track, TrackBuilder, sort_tracks
from .engine import MttEngine, StepDiagnostics, TrackerResult, run_tracker
__all__ = [
    "Detection",
    "PotentialTarget",
    "detect_and_estimate",
    "format_label",
    "parse_label",
    "predict",
    "prune",
    "systematic_resample",
    "FlowResult",
    "FlowSettings",
    "edh_flow",
    "gaussian_fit",
    "gaussian_logpdf",
    "pseudo_time_steps",
    "AssociationBelief",
    "association_update",
    "count_events",
    "solve_association",
    "solve_exact",
    "solve_spa",
    "Track",
    "TrackBuilder",
    "sort_tracks",
    "MttEngine",
    "StepDiagnostics",
    "TrackerResult",
    "run_tracker",
]
