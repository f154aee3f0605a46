#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/signal_tests/test_audio.py
Unit tests for audio input and output.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest
from exonware.xwecho import SampledSignal, XWEchoSchemaError, read_audio, write_raw, write_wave
@pytest.mark.xwecho_unit

class TestAudio:
    """Wave files and raw float32 with sidecar headers."""

    def test_raw_with_sidecar(self, tmp_path, rng):
        channels = [SampledSignal(rng.normal(size=1000).astype(np.float32), 96_000.0, 3.5) for _ in range(4)]
        path = write_raw(tmp_path / "rec.f32", channels)
        loaded = read_audio(path)
        assert len(loaded) == 4
        assert loaded[2].fs == 96_000.0 and loaded[2].t0 == 3.5
        assert np.array_equal(loaded[2].samples, channels[2].samples)

    def test_wave_channels(self, tmp_path):
        channels = [SampledSignal(np.linspace(-0.5, 0.5, 800), 100_000.0) for _ in range(2)]
        loaded = read_audio(write_wave(tmp_path / "rec.wav", channels))
        assert len(loaded) == 2
        assert loaded[0].fs == 100_000.0
        assert np.allclose(loaded[1].samples, channels[1].samples, atol=1e-7)

    def test_raw_without_sidecar(self, tmp_path):
        path = tmp_path / "bare.f32"
        np.zeros(16, dtype="<f4").tofile(path)
        with pytest.raises(XWEchoSchemaError):
            read_audio(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(XWEchoSchemaError):
            read_audio(tmp_path / "absent.wav")
