#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/sim_tests/test_waveform.py
Unit tests for the multichannel click renderer.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest
from exonware.xwecho import (
    ClickSource,
    HarmonicNoise,
    XWEchoValidationError,
    gabor_click,
    render_channels,
)
@pytest.mark.xwecho_unit

class TestClickShapes:
    """Click pulse and harmonic noise."""

    def test_gabor_peak(self):
        t = np.linspace(-1e-4, 1e-4, 2001)
        pulse = gabor_click(t)
        assert pulse[1000] == pytest.approx(1.0)
        assert np.abs(pulse[:200]).max() < 1e-6

    def test_harmonic_duty_cycle(self):
        noise = HarmonicNoise(frequencies=(1_000.0,), amplitude=1.0, period=2.0, duty=0.5)
        t = np.arange(0.0, 4.0, 1e-5)
        out = noise.render(t)
        assert np.abs(out[(t % 2.0) > 1.01]).max() == 0.0
        assert np.abs(out[(t % 2.0) < 0.99]).max() > 0.99
@pytest.mark.xwecho_unit

class TestRenderChannels:
    """One channel per hydrophone with propagation delays."""

    def test_shapes(self, geometry):
        channels = render_channels([], geometry, fs=50_000.0, duration=0.2, rng=1, t0=5.0)
        assert len(channels) == 8
        assert all(len(c) == 10_000 and c.fs == 50_000.0 and c.t0 == 5.0 for c in channels)

    def test_arrival_offsets_match_ranges(self, geometry):
        source = ClickSource(np.array([100.0, 300.0, -1200.0]), click_interval=0.5)
        fs = 100_000.0
        channels = render_channels([source], geometry, fs=fs, duration=2.0, rng=3, white_std=0.0)
        hydrophones = np.vstack(geometry.arrays)
        ranges = np.linalg.norm(hydrophones - source.start, axis=1)
        peaks = np.array([np.argmax(np.abs(c.samples)) for c in channels]) / fs
        emission_phase = np.mod(peaks - ranges / geometry.sound_speed, 0.5)
        spread = np.mod(emission_phase - emission_phase[0] + 0.25, 0.5) - 0.25
        assert np.all(np.abs(spread) <= 1.5 / fs)

    def test_seeded(self, geometry):
        source = ClickSource(np.array([0.0, 500.0, -1000.0]), click_interval=0.1)
        first = render_channels([source], geometry, fs=50_000.0, duration=0.5, rng=8, harmonic=HarmonicNoise())
        second = render_channels([source], geometry, fs=50_000.0, duration=0.5, rng=8, harmonic=HarmonicNoise())
        assert all(np.array_equal(a.samples, b.samples) for a, b in zip(first, second))

    def test_bad_rate(self, geometry):
        with pytest.raises(XWEchoValidationError):
            render_channels([], geometry, fs=0.0)
