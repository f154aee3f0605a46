#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/config_tests/test_config.py
Unit tests for XWEchoConfig.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import json
import pytest
from exonware.xwecho import (
    MttHyperparams,
    ScenarioConfig,
    WeightingKind,
    XWEchoConfig,
    XWEchoConfigError,
    get_config,
    load_config,
    set_config,
)
@pytest.mark.xwecho_unit

class TestConfig:
    """Test XWEchoConfig."""

    def test_config_default_values(self):
        """Test config default values."""
        config = XWEchoConfig()
        assert config.signal.nfft == 512
        assert config.signal.hop == 256
        assert config.signal.weighting is WeightingKind.WIN
        assert config.cluster.step_length > 0.0
        assert config.tdoa.prune_threshold == 1e-7
        assert config.tracking_3d.survival_probability == 0.99

    def test_hyperparameter_columns(self):
        tdoa = MttHyperparams.tdoa_default()
        assert (tdoa.detection_probability, tdoa.mean_false_positives, tdoa.measurement_std) == (0.8, 10.0, 1e-5)
        assert tdoa.driving_std == 1.5e-7
        spatial = MttHyperparams.tracking3d_default()
        assert (spatial.mean_false_positives, spatial.mean_births, spatial.driving_std) == (1.0, 1.0, 1e-2)

    def test_probability_out_of_range(self):
        with pytest.raises(XWEchoConfigError):
            MttHyperparams(detection_probability=1.5)

    def test_scenario_must_fit(self):
        """Staggered presence intervals must fit in the scenario."""
        with pytest.raises(XWEchoConfigError):
            ScenarioConfig(n_whales=5, n_steps=60, presence_length=50, stagger=10)

    def test_from_dict_merges_over_stage_defaults(self):
        config = XWEchoConfig.from_dict({"tdoa": {"num_particles": 500}, "signal": {"weighting": "scot"}})
        assert config.tdoa.num_particles == 500
        assert config.tdoa.prune_threshold == 1e-7
        assert config.signal.weighting is WeightingKind.SCOT

    def test_to_dict_round_trip(self):
        config = XWEchoConfig.default()
        assert XWEchoConfig.from_dict(config.to_dict()).to_dict() == config.to_dict()

    def test_global_config(self):
        """Test global config get/set."""
        original = get_config()
        custom = XWEchoConfig.from_dict({"pipeline": {"seed": 99}})
        set_config(custom)
        assert get_config().pipeline.seed == 99
        set_config(original)
        assert get_config() is original

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(XWEchoConfigError):
            load_config(tmp_path / "absent.json")

    def test_load_json_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"pipeline": {"seed": 4}, "cluster": {"step_length": 2.0}}), encoding="utf-8")
        config = load_config(path, validate=False)
        assert config.pipeline.seed == 4
        assert config.cluster.step_length == 2.0
