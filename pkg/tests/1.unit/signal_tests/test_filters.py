#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/signal_tests/test_filters.py
Unit tests for the highpass prefilter and ADCP removal.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest
from exonware.xwecho import SampledSignal, XWEchoValidationError, prefilter_highpass, remove_adcp
FS = 100_000.0


def _rms_db(x: np.ndarray) -> float:
    return 20.0 * np.log10(np.sqrt(np.mean(x**2)))
@pytest.mark.xwecho_unit

class TestPrefilter:
    """Zero-phase equiripple highpass."""

    def test_stopband_attenuation(self, tone):
        x = tone(5_000.0)
        y = prefilter_highpass(SampledSignal(x, FS)).samples
        middle = slice(2_000, 18_000)
        assert _rms_db(x[middle]) - _rms_db(y[middle]) >= 40.0

    def test_passband_gain(self, tone):
        x = tone(36_000.0)
        y = prefilter_highpass(SampledSignal(x, FS)).samples
        middle = slice(2_000, 18_000)
        assert abs(_rms_db(x[middle]) - _rms_db(y[middle])) <= 1.0

    def test_zero_phase(self, tone):
        """A passband tone comes out without delay."""
        x = tone(36_000.0)
        y = prefilter_highpass(SampledSignal(x, FS)).samples
        middle = slice(2_000, 18_000)
        assert np.allclose(y[middle], x[middle], atol=0.05)

    def test_low_rate_rejected(self):
        with pytest.raises(XWEchoValidationError):
            prefilter_highpass(SampledSignal(np.zeros(4096), 30_000.0))

    def test_timing_preserved(self, tone):
        signal = SampledSignal(tone(20_000.0), FS, t0=12.5)
        assert prefilter_highpass(signal).t0 == 12.5
@pytest.mark.xwecho_unit

class TestAdcpRemoval:
    """Narrowband pulse nulling."""

    def test_clean_recording_untouched(self):
        rng = np.random.default_rng(0)
        x = rng.normal(0.0, 0.01, int(2 * FS))
        x[50_000:50_020] += 0.5
        y = remove_adcp(SampledSignal(x, FS)).samples
        assert np.array_equal(x, y)

    def test_injected_pulse_zeroed(self):
        rng = np.random.default_rng(1)
        x = rng.normal(0.0, 0.01, int(2 * FS))
        start, stop = 100_000, 101_000
        t = np.arange(stop - start) / FS
        x[start:stop] += np.sin(2 * np.pi * 25_000.0 * t)
        y = remove_adcp(SampledSignal(x, FS)).samples
        assert np.all(y[start:stop] == 0.0)
        assert np.array_equal(y[:90_000], x[:90_000])
        assert np.array_equal(y[111_000:], x[111_000:])
