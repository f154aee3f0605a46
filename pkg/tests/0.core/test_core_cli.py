#!/usr/bin/env python3
"""
#exonware/xwecho/tests/0.core/test_core_cli.py
Core command-line checks.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import replace
import pytest
from exonware.xwecho import XWEchoConfig, __version__, cmd_track_tdoa
from exonware.xwecho.cli import build_parser, main, resolve_config
@pytest.mark.xwecho_core

class TestCoreCli:
    """Argument parsing and exit codes."""

    def test_version_flag(self, capsys):
        assert main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_unknown_subcommand_is_usage_error(self):
        assert main(["no-such-command"]) == 2

    def test_missing_measurement_table_exits_with_input_code(self, tmp_path):
        code = main(["track-tdoa", str(tmp_path / "missing.csv"), "--out", str(tmp_path / "out")])
        assert code == 3

    def test_overrides_reach_configuration(self, tmp_path):
        args = build_parser().parse_args(
            ["track", "m.csv", "--seed", "11", "--tm", "2.5", "--weighting", "phat", "--out", str(tmp_path)]
        )
        config = resolve_config(args)
        assert config.pipeline.seed == 11
        assert config.cluster.step_length == 2.5
        assert config.signal.weighting.value == "phat"
        assert config.pipeline.output_dir == str(tmp_path)

    def test_cli_writes_same_bytes_as_library(self, tmp_path):
        table = tmp_path / "measurements.csv"
        table.write_text(
            "step,sensor,delay_s,amplitude\n0,0,1e-4,0.9\n1,0,1.01e-4,0.8\n2,0,1.02e-4,0.7\n2,3,-2e-4,0.5\n",
            encoding="utf-8",
        )
        hp = tmp_path / "hp.json"
        hp.write_text('{"tdoa": {"num_particles": 300, "min_track_length": 2}}', encoding="utf-8")
        cli_out = tmp_path / "cli"
        argv = ["track-tdoa", str(table), "--seed", "5", "--hyperparameters", str(hp), "--out", str(cli_out)]
        assert main(argv) == 0
        config = XWEchoConfig.default()
        config.pipeline = replace(config.pipeline, seed=5, hyperparameter_path=str(hp), output_dir=str(cli_out))
        lib_out = tmp_path / "lib"
        cmd_track_tdoa(table, config, lib_out)
        for name in ("tdoa_tracks.csv", "tdoa_estimates.csv", "tdoa_diagnostics.csv", "manifest_track_tdoa.json"):
            assert (cli_out / name).read_bytes() == (lib_out / name).read_bytes()
