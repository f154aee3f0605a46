#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/conftest.py
Unit-specific test fixtures for xwecho.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest


@pytest.fixture
def sensor(geometry):
    """First pair sensor of the west array."""
    return geometry.sensor(0)


@pytest.fixture
def measurement_csv(tmp_path):
    """Small well-formed measurement table."""
    path = tmp_path / "measurements.csv"
    path.write_text(
        "step,sensor,delay_s,amplitude\n"
        "0,0,1e-4,0.9\n"
        "0,0,-2e-4,0.5\n"
        "1,0,1.01e-4,0.8\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture
def tone():
    """Factory for a sampled sine at a given frequency."""
    def make(freq: float, fs: float = 100_000.0, n: int = 20_000) -> np.ndarray:
        return np.sin(2 * np.pi * freq * np.arange(n) / fs)
    return make
