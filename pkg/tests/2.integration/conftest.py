#!/usr/bin/env python3
"""
#exonware/xwecho/tests/2.integration/conftest.py
Integration-specific test fixtures for xwecho.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import replace
import pytest
from exonware.xwecho import XWEchoConfig, WeightingKind


@pytest.fixture
def fast_config(tmp_path):
    """Default configuration scaled down for end-to-end runs."""
    config = XWEchoConfig.default()
    return replace(
        config,
        signal=replace(config.signal, weighting=WeightingKind.PHAT, p_tdoa=0.2),
        cluster=replace(config.cluster, step_length=0.5),
        tdoa=replace(config.tdoa, num_particles=2000, min_track_length=3),
        tracking_3d=replace(config.tracking_3d, num_particles=5000, min_track_length=3),
        tracker3d=replace(config.tracker3d, birth_pool_size=20_000, apply_speed_pruning=False),
        pipeline=replace(config.pipeline, output_dir=str(tmp_path / "out"), seed=3),
    )
