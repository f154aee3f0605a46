#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/sim/study.py
Monte-Carlo comparison of the multi-target tracker (MTT) with the NST and
SBT baselines over scenarios with one to four whales.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from ..config import ScenarioConfig, StudyConfig, Tracker3dConfig
from ..defs import TrackingMethod
from ..mtt import Track
from ..tables import write_table
from ..tracking import ArrayGeometry, track_3d
from .baselines import run_nst, run_sbt
from .metrics import cardinality_stats, rmse_with_penalty
from .scenario import generate_scenario, synthesize_measurements
logger = get_logger(__name__)
RUN_COLUMNS = ["n_whales", "run", "seed", "method", "rmse", "track_count"]


@dataclass
class RunOutcome:
    """Scores of one Monte-Carlo run for every method."""
    n_whales: int
    run: int
    seed: int
    rmse: dict[str, float]
    track_counts: dict[str, int]
    step_errors: pd.DataFrame


def run_once(
    n_whales: int,
    run: int,
    study: StudyConfig,
    scenario: ScenarioConfig,
    tracker3d: Tracker3dConfig,
    geometry: ArrayGeometry,
) -> RunOutcome:
    """One scenario draw scored for MTT, NST and SBT; seed = base_seed + run."""
    seed = study.base_seed + run
    cfg = replace(scenario, n_whales=n_whales)
    hp = replace(cfg.hp, num_particles=study.num_particles)
    rng = np.random.default_rng([seed, n_whales])
    truth = generate_scenario(cfg, rng)
    synth = synthesize_measurements(truth, geometry, cfg.hp, rng)
    steps = range(truth.n_steps)
    estimates: dict[str, list[Track]] = {}
    mtt_rng = np.random.default_rng([seed, n_whales, 1])
    mtt = track_3d(synth.stream, geometry, hp, tracker3d, cfg.step_length, mtt_rng, steps=steps)
    estimates[TrackingMethod.MTT.value] = mtt.tracks
    estimates[TrackingMethod.NST.value] = []
    estimates[TrackingMethod.SBT.value] = []
    for whale in truth.whales:
        own = synth.whale_stream(whale.index)
        presence = range(whale.birth_step, whale.death_step + 1)
        nst = run_nst(
            own, geometry, cfg.hp.measurement_std, presence, study.nst_mode, cfg.step_length,
            (whale.birth_step, -1, whale.index),
        )
        if nst is not None:
            estimates[TrackingMethod.NST.value].append(nst)
        sbt_rng = np.random.default_rng([seed, n_whales, 2, whale.index])
        sbt = run_sbt(
            own, geometry, hp, tracker3d, cfg.step_length, sbt_rng, presence,
            (whale.birth_step, -2, whale.index),
        )
        if sbt is not None:
            estimates[TrackingMethod.SBT.value].append(sbt)
    rmse: dict[str, float] = {}
    frames = []
    for method, tracks in estimates.items():
        scored = rmse_with_penalty(tracks, truth, study.penalty)
        rmse[method] = scored.rmse
        frames.append(scored.step_errors.assign(method=method))
    logger.debug(f"Run {run} ({n_whales} whales): " + ", ".join(f"{m}={v:.1f} m" for m, v in rmse.items()))
    return RunOutcome(
        n_whales,
        run,
        seed,
        rmse,
        {m: len(t) for m, t in estimates.items()},
        pd.concat(frames, ignore_index=True),
    )


def _run_args(args: tuple) -> RunOutcome:
    return run_once(*args)


@dataclass
class StudyResult:
    """Result tables of a study."""
    rmse_runs: pd.DataFrame
    rmse_summary: pd.DataFrame
    step_errors: pd.DataFrame
    age_errors: pd.DataFrame
    cardinality: pd.DataFrame

    def write(self, out_dir: str | Path) -> list[Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        return [
            write_table(self.rmse_runs, out / "rmse_runs.csv"),
            write_table(self.rmse_summary, out / "rmse_summary.csv"),
            write_table(self.step_errors, out / "step_errors.csv"),
            write_table(self.age_errors, out / "age_errors.csv"),
            write_table(self.cardinality, out / "cardinality.csv"),
        ]


def summarize(outcomes: list[RunOutcome], penalty: float) -> StudyResult:
    runs = pd.DataFrame(
        [
            (o.n_whales, o.run, o.seed, method, value, o.track_counts[method])
            for o in outcomes
            for method, value in o.rmse.items()
        ],
        columns=RUN_COLUMNS,
    )
    summary = (
        runs.groupby(["n_whales", "method"], sort=True)["rmse"]
        .agg(mean_rmse="mean", p75_rmse=lambda x: float(np.percentile(x, 75)), runs="count")
        .reset_index()
    )
    summary["penalty"] = float(penalty)
    errors = pd.concat(
        [o.step_errors.assign(n_whales=o.n_whales, run=o.run) for o in outcomes], ignore_index=True
    ) if outcomes else pd.DataFrame(columns=["n_whales", "method", "step", "age", "error"])
    step_errors = (
        errors.groupby(["n_whales", "method", "step"], sort=True)["error"]
        .agg(mean_error="mean", count="count")
        .reset_index()
    )
    age_errors = (
        errors.groupby(["n_whales", "method", "age"], sort=True)["error"]
        .agg(mean_error="mean", count="count")
        .reset_index()
    )
    mtt = runs[runs["method"] == TrackingMethod.MTT.value]
    cardinality = pd.DataFrame(
        [
            (
                int(n),
                len(group),
                int((group["track_count"] > n).sum()),
                cardinality_stats(group["track_count"].to_list(), int(n)),
            )
            for n, group in mtt.groupby("n_whales", sort=True)
        ],
        columns=["n_whales", "runs", "extra_track_runs", "extra_fraction"],
    )
    return StudyResult(runs, summary, step_errors, age_errors, cardinality)


def run_study(
    study: StudyConfig,
    scenario: ScenarioConfig | None = None,
    tracker3d: Tracker3dConfig | None = None,
    geometry: ArrayGeometry | None = None,
    progress: Callable[[RunOutcome], None] | None = None,
) -> StudyResult:
    """
    All runs for every configured whale count. Runs are independent and are
    spread over worker processes when study.workers > 1.
    """
    scenario = scenario or ScenarioConfig()
    tracker3d = tracker3d or Tracker3dConfig(apply_speed_pruning=False)
    geometry = geometry or ArrayGeometry.two_array_default()
    jobs = [(n, run, study, scenario, tracker3d, geometry) for n in study.n_whales for run in range(study.runs)]
    logger.info(f"Monte-Carlo study: {len(jobs)} runs")
    outcomes: list[RunOutcome] = []
    if study.workers > 1:
        with ProcessPoolExecutor(max_workers=study.workers) as executor:
            for outcome in executor.map(_run_args, jobs):
                outcomes.append(outcome)
                if progress:
                    progress(outcome)
    else:
        for job in jobs:
            outcome = run_once(*job)
            outcomes.append(outcome)
            if progress:
                progress(outcome)
    logger.info("Monte-Carlo study finished")
    return summarize(outcomes, study.penalty)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "RUN_COLUMNS",
    "RunOutcome",
    "run_once",
    "StudyResult",
    "summarize",
    "run_study",
]
