#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/signal_tests/test_noise.py
Unit tests for spectrograms, noise templates and transient suppression.
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
    NoiseTemplateBank,
    SampledSignal,
    XWEchoNumericalError,
    XWEchoValidationError,
    align_noise_template,
    estimate_noise_template,
    spectrogram,
    suppress_transients,
)
FS = 10_000.0
PERIOD_SAMPLES = 3200


def _stepped_tone(start: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Tone whose frequency steps through four values every period."""
    idx = start + np.arange(n)
    quarter = np.floor((idx % PERIOD_SAMPLES) / PERIOD_SAMPLES * 4.0)
    freq = 500.0 + 1000.0 * quarter
    return np.sin(2 * np.pi * freq * idx / FS) + rng.normal(0.0, 1e-3, n)
@pytest.mark.xwecho_unit

class TestSpectrogram:
    """Power spectrogram framing."""

    def test_shape(self):
        spec = spectrogram(np.ones(2048), nfft=256, overlap=0.5)
        assert spec.shape == (129, 15)

    def test_short_signal_rejected(self):
        with pytest.raises(XWEchoValidationError):
            spectrogram(np.ones(100), nfft=256)
@pytest.mark.xwecho_unit

class TestNoiseTemplate:
    """Template estimation and alignment."""

    def test_template_of_periodic_noise_is_period_independent(self, tone):
        """A strictly periodic input gives the same template from two or four periods."""
        fs = 100_000.0
        period = 0.1
        n = int(4 * period * fs)
        half = int(period * fs) // 2
        gate = ((np.arange(n) % (2 * half)) < half).astype(float)
        x = gate * tone(1000.0, fs, n)
        four = estimate_noise_template(SampledSignal(x, fs), period, nfft=512)
        two = estimate_noise_template(SampledSignal(x[: n // 2], fs), period, nfft=512)
        assert four.spectrogram.shape == two.spectrogram.shape
        assert np.allclose(four.spectrogram, two.spectrogram, rtol=1e-9, atol=1e-9 * two.spectrogram.max())

    def test_template_needs_a_full_period(self):
        with pytest.raises(XWEchoValidationError):
            estimate_noise_template(SampledSignal(np.ones(500), FS), period=0.1, nfft=64)

    def test_alignment_recovers_frame_shift(self):
        """Observed audio starting 37 hops into the period aligns at offset 37."""
        rng = np.random.default_rng(3)
        template = estimate_noise_template(
            SampledSignal(_stepped_tone(0, 5 * PERIOD_SAMPLES, rng), FS), PERIOD_SAMPLES / FS, nfft=64
        )
        assert template.hop == 32
        observed = spectrogram(_stepped_tone(37 * 32, 3 * PERIOD_SAMPLES, rng), nfft=64)
        assert align_noise_template(template, observed) == 37

    def test_alignment_of_plain_array(self):
        rng = np.random.default_rng(4)
        base = rng.uniform(0.5, 1.5, size=(17, 20))
        observed = np.roll(np.tile(base, (1, 3)), -6, axis=1)
        assert align_noise_template(base, observed) == 6

    def test_flat_observation_rejected(self):
        template = np.random.default_rng(1).uniform(size=(9, 5))
        with pytest.raises(XWEchoNumericalError):
            align_noise_template(template, np.ones((9, 12)))

    def test_bank_save_and_load(self, tmp_path):
        rng = np.random.default_rng(8)
        template = estimate_noise_template(
            SampledSignal(_stepped_tone(0, 2 * PERIOD_SAMPLES, rng), FS), PERIOD_SAMPLES / FS, nfft=64
        )
        path = NoiseTemplateBank([template, template]).save(tmp_path / "bank.npz")
        loaded = NoiseTemplateBank.load(path)
        assert len(loaded) == 2
        assert loaded[1].period == template.period
        assert np.array_equal(loaded[0].spectrogram, template.spectrogram)
@pytest.mark.xwecho_unit

class TestTransientSuppression:
    """Click removal before template estimation."""

    def test_click_replaced_by_mean_amplitude(self):
        rng = np.random.default_rng(2)
        x = rng.normal(0.0, 0.01, 50_000)
        x[20_000:20_050] = 1.0
        cleaned = suppress_transients(SampledSignal(x, 100_000.0), window=1e-3).samples
        assert np.max(np.abs(cleaned[20_000:20_050])) < 0.05
        assert np.array_equal(cleaned[:10_000], x[:10_000])
