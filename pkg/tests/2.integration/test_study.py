#!/usr/bin/env python3
"""
#exonware/xwecho/tests/2.integration/test_study.py
Small Monte-Carlo study comparing MTT, NST and SBT.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import replace
import pytest
from exonware.xwecho import (
    ArrayGeometry,
    ScenarioConfig,
    StudyConfig,
    Tracker3dConfig,
    XWEchoConfig,
    cmd_simulate,
    run_once,
)


@pytest.fixture
def small_scenario() -> ScenarioConfig:
    return ScenarioConfig(n_whales=1, n_steps=25, presence_length=20)
@pytest.mark.xwecho_integration
@pytest.mark.slow

class TestStudy:
    """Scores of every method for a short scenario."""

    def test_run_once_scores_every_method(self, small_scenario):
        study = StudyConfig(n_whales=(1,), runs=1, num_particles=3000)
        tracker3d = Tracker3dConfig(birth_pool_size=30_000, apply_speed_pruning=False)
        outcome = run_once(1, 0, study, small_scenario, tracker3d, ArrayGeometry.two_array_default())
        assert set(outcome.rmse) == {"mtt", "nst", "sbt"}
        assert all(0.0 <= v <= study.penalty for v in outcome.rmse.values())
        assert set(outcome.step_errors["method"]) == {"mtt", "nst", "sbt"}
        assert len(outcome.step_errors) == 3 * 20

    def test_run_once_is_seeded(self, small_scenario):
        study = StudyConfig(n_whales=(1,), runs=1, num_particles=2000, base_seed=4)
        tracker3d = Tracker3dConfig(birth_pool_size=20_000, apply_speed_pruning=False)
        geometry = ArrayGeometry.two_array_default()
        first = run_once(1, 0, study, small_scenario, tracker3d, geometry)
        second = run_once(1, 0, study, small_scenario, tracker3d, geometry)
        assert first.seed == 4
        assert first.rmse == second.rmse

    def test_simulate_command(self, small_scenario, tmp_path):
        config = XWEchoConfig.default()
        config.scenario = small_scenario
        config.study = replace(config.study, n_whales=(1,), runs=2, num_particles=2000)
        config.tracker3d = replace(config.tracker3d, birth_pool_size=20_000)
        result = cmd_simulate(config, tmp_path)
        assert len(result.rmse_runs) == 2 * 3
        assert set(result.rmse_summary["method"]) == {"mtt", "nst", "sbt"}
        assert result.cardinality["runs"].tolist() == [2]
        for name in ("rmse_runs.csv", "rmse_summary.csv", "cardinality.csv", "manifest_simulate.json"):
            assert (tmp_path / name).exists()
