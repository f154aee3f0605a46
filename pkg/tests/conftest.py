#!/usr/bin/env python3
"""
#exonware/xwecho/tests/conftest.py
Shared test fixtures and configuration for xwecho tests.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest


@pytest.fixture(autouse=True)
def reset_global_config():
    """Restore the default global configuration after each test."""
    yield
    from exonware.xwecho import XWEchoConfig, set_config
    set_config(XWEchoConfig.default())


@pytest.fixture
def rng():
    """Seeded generator for reproducible draws."""
    return np.random.default_rng(12345)


@pytest.fixture
def geometry():
    """Two tetrahedral arrays 1000 m apart at 1330 m depth, 1 m edges."""
    from exonware.xwecho import ArrayGeometry
    return ArrayGeometry.two_array_default()


@pytest.fixture
def click_pair():
    """Broadband click at sample 300 in channel a; channel b leads by 5 samples."""
    fs = 100_000.0
    t = np.arange(1024) / fs
    a = np.exp(-0.5 * ((t - 300 / fs) / 2e-5) ** 2) * np.cos(2 * np.pi * 30_000.0 * (t - 300 / fs))
    a = a + np.random.default_rng(7).normal(0.0, 1e-3, size=a.size)
    b = np.roll(a, -5)
    return a, b, fs


@pytest.fixture
def tdoa_hp():
    """Delay-domain hyperparameters with a small particle count."""
    from exonware.xwecho import MttHyperparams
    from dataclasses import replace
    return replace(MttHyperparams.tdoa_default(), num_particles=2000, min_track_length=3)
