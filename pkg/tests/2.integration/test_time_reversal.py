#!/usr/bin/env python3
"""
#exonware/xwecho/tests/2.integration/test_time_reversal.py
Forward and reversed-time 3-D tracking of the same two-whale measurement table.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import replace
import numpy as np
import pytest
from exonware.xwecho import (
    ArrayGeometry,
    ScenarioConfig,
    XWEchoConfig,
    cmd_track_3d,
    generate_scenario,
    match_tracks,
    synthesize_measurements,
    write_measurements,
)
SETTLING_STEPS = 5


def _two_whale_table(path) -> ScenarioConfig:
    scenario = ScenarioConfig(n_whales=2, n_steps=40, presence_length=30, stagger=10)
    rng = np.random.default_rng(8)
    truth = generate_scenario(scenario, rng)
    synth = synthesize_measurements(truth, ArrayGeometry.two_array_default(), scenario.hp, rng)
    write_measurements(path, synth.to_sets(scenario.step_length))
    return scenario


def _config(reverse: bool) -> XWEchoConfig:
    config = XWEchoConfig.default()
    config.tracking_3d = replace(config.tracking_3d, num_particles=20_000)
    config.tracker3d = replace(config.tracker3d, birth_pool_size=200_000, apply_speed_pruning=False)
    config.pipeline = replace(config.pipeline, seed=2, reverse_time=reverse)
    return config


def _settled(tracks, reverse: bool):
    """Tracks without their first steps in processing order."""
    out = []
    for track in tracks:
        keep = slice(None, -SETTLING_STEPS) if reverse else slice(SETTLING_STEPS, None)
        out.append(replace(track, steps=track.steps[keep], states=track.states[keep], existences=track.existences[keep]))
    return [t for t in out if len(t.steps)]
@pytest.mark.xwecho_integration
@pytest.mark.slow

class TestTimeReversal:
    """Reversed processing recovers the same two trajectories."""

    def test_forward_and_reversed_tracks_agree(self, tmp_path):
        table = tmp_path / "measurements.csv"
        _two_whale_table(table)
        forward = cmd_track_3d(table, _config(False), tmp_path / "forward").tracks
        backward = cmd_track_3d(table, _config(True), tmp_path / "backward").tracks
        assert len(forward) >= 2 and len(backward) >= 2
        matches = match_tracks(_settled(forward, False), _settled(backward, True))
        agreeing = [m for m in matches if m.steps.size >= 10 and np.median(m.distances) <= 50.0]
        assert len(agreeing) >= 2
        for match in agreeing:
            assert np.mean(match.distances <= 50.0) >= 0.8
