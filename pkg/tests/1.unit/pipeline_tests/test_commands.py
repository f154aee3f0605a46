#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/pipeline_tests/test_commands.py
Unit tests for pipeline commands and console exit codes.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import json
from dataclasses import replace
import numpy as np
import pandas as pd
import pytest
from exonware.xwecho import (
    SampledSignal,
    StudyResult,
    Track,
    XWEchoConfig,
    XWEchoConfigError,
    cmd_extract,
    cmd_simulate,
    cmd_template,
    cmd_track_tdoa,
    write_wave,
)
from exonware.xwecho.cli import main
from exonware.xwecho.pipeline.commands import _restore_steps, _time_order


def _noise_wave(path, n_channels: int, seconds: float, rng: np.random.Generator):
    channels = [SampledSignal(rng.normal(0.0, 0.05, size=int(seconds * 100_000)), 100_000.0) for _ in range(n_channels)]
    return write_wave(path, channels)
@pytest.mark.xwecho_unit

class TestTrackTdoaCommand:
    """Per-sensor tracking from a measurement table."""

    def test_outputs_written(self, measurement_csv, tdoa_hp, tmp_path):
        config = XWEchoConfig.default()
        config.tdoa = tdoa_hp
        out = tmp_path / "run"
        results = cmd_track_tdoa(measurement_csv, config, out)
        assert sorted(results) == list(range(12))
        for name in ("tdoa_tracks.csv", "tdoa_estimates.csv", "tdoa_diagnostics.csv", "manifest_track_tdoa.json"):
            assert (out / name).exists()

    def test_same_seed_same_tables(self, measurement_csv, tdoa_hp, tmp_path):
        config = XWEchoConfig.default()
        config.tdoa = tdoa_hp
        cmd_track_tdoa(measurement_csv, config, tmp_path / "a")
        cmd_track_tdoa(measurement_csv, config, tmp_path / "b")
        for name in ("tdoa_tracks.csv", "tdoa_diagnostics.csv", "manifest_track_tdoa.json"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
@pytest.mark.xwecho_unit

class TestReverseTime:
    """Last-step-first processing maps back to original steps."""

    def test_stream_order(self):
        stream = {2: {0: np.array([1e-4])}, 3: {0: np.array([2e-4])}, 5: {0: np.array([3e-4])}}
        ordered, step_sum = _time_order(stream, reverse=True)
        assert step_sum == 7
        assert sorted(ordered) == [2, 4, 5]
        assert ordered[2][0][0] == 3e-4
        assert _time_order(stream, reverse=False) == (stream, 0)

    def test_tracks_restored(self):
        states = np.array([[1e-4, 1e-6], [1.1e-4, 1e-6], [1.2e-4, 1e-6]])
        track = Track((2, 0, 0), np.array([2, 3, 4]), states, np.array([0.6, 0.7, 0.8]), sensor=1)
        restored = _restore_steps([track], step_sum=7)[0]
        assert restored.steps.tolist() == [3, 4, 5]
        assert restored.states[:, 0].tolist() == [1.2e-4, 1.1e-4, 1e-4]
        assert np.all(restored.states[:, 1] == -1e-6)
        assert restored.existences.tolist() == [0.8, 0.7, 0.6]
        assert restored.sensor == 1
@pytest.mark.xwecho_unit

class TestAudioCommands:
    """Template estimation and extraction entry checks."""

    def test_template_bank(self, tmp_path, rng):
        wave = _noise_wave(tmp_path / "noise.wav", 2, 0.2, rng)
        config = XWEchoConfig.default()
        config.signal = replace(config.signal, template_period=0.05)
        bank = cmd_template([wave], config, tmp_path / "bank" / "templates.npz")
        assert len(bank) == 2
        assert (tmp_path / "bank" / "templates.npz").exists()
        assert (tmp_path / "bank" / "templates.json").exists()
        assert bank[0].spectrogram.shape[0] == config.signal.nfft // 2 + 1

    def test_extract_needs_all_channels(self, tmp_path, rng):
        wave = _noise_wave(tmp_path / "short.wav", 4, 0.05, rng)
        with pytest.raises(XWEchoConfigError):
            cmd_extract([wave], XWEchoConfig.default(), tmp_path / "out")
@pytest.mark.xwecho_unit

class TestExitCodes:
    """Errors map to process exit codes."""

    def test_win_without_template_is_usage_error(self, tmp_path, rng):
        wave = _noise_wave(tmp_path / "rec.wav", 8, 0.05, rng)
        assert main(["extract", str(wave), "--out", str(tmp_path / "out")]) == 2

    def test_unknown_sensor_is_input_error(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("step,sensor,delay_s,amplitude\n0,20,1e-4,1.0\n", encoding="utf-8")
        assert main(["track-tdoa", str(path), "--out", str(tmp_path / "out")]) == 3

    def test_success_prints_summary(self, measurement_csv, tmp_path, capsys):
        hp = tmp_path / "hp.json"
        hp.write_text('{"tdoa": {"num_particles": 500, "min_track_length": 3}}', encoding="utf-8")
        code = main(["track-tdoa", str(measurement_csv), "--hyperparameters", str(hp), "--out", str(tmp_path / "o")])
        assert code == 0
        assert "track-tdoa:" in capsys.readouterr().out


@pytest.fixture
def captured_study(monkeypatch):
    """Replace the Monte-Carlo study by a recorder returning empty tables."""
    calls: list[tuple] = []

    def fake_run_study(study, scenario, tracker3d, geometry):
        calls.append((study, scenario, tracker3d))
        return StudyResult(*(pd.DataFrame({"n_whales": []}) for _ in range(5)))
    monkeypatch.setattr("exonware.xwecho.pipeline.commands.run_study", fake_run_study)
    return calls
@pytest.mark.xwecho_unit

class TestSimulateCommand:
    """Seed and hyperparameter handling of the study command."""

    def test_explicit_zero_seed_wins(self, captured_study, tmp_path):
        config = XWEchoConfig.default()
        config.study = replace(config.study, base_seed=7)
        config.pipeline = replace(config.pipeline, seed=0)
        cmd_simulate(config, tmp_path)
        assert captured_study[0][0].base_seed == 0

    def test_unset_seed_keeps_study_seed(self, captured_study, tmp_path):
        config = XWEchoConfig.default()
        config.study = replace(config.study, base_seed=7)
        cmd_simulate(config, tmp_path)
        assert captured_study[0][0].base_seed == 7
        assert not captured_study[0][2].apply_speed_pruning

    def test_cli_seed_zero_overrides_config_file(self, captured_study, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"study": {"base_seed": 5}}', encoding="utf-8")
        assert main(["simulate", "--config", str(cfg), "--seed", "0", "--out", str(tmp_path / "o")]) == 0
        assert captured_study[0][0].base_seed == 0

    def test_hyperparameter_file_reaches_scenario(self, captured_study, tmp_path):
        hp = tmp_path / "hp.json"
        hp.write_text('{"tracking_3d": {"detection_probability": 0.6}}', encoding="utf-8")
        config = XWEchoConfig.default()
        config.pipeline = replace(config.pipeline, hyperparameter_path=str(hp))
        cmd_simulate(config, tmp_path / "out")
        scenario = captured_study[0][1]
        assert scenario.hp.detection_probability == 0.6
        assert scenario.hp.survival_probability == 0.99
        manifest = json.loads((tmp_path / "out" / "manifest_simulate.json").read_text(encoding="utf-8"))
        assert [entry["path"] for entry in manifest["inputs"]] == ["hp.json"]
