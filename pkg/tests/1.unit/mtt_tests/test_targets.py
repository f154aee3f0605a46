#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/mtt_tests/test_targets.py
Unit tests for potential targets, labels and the engine loop.
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
    CvMotionModel,
    MttEngine,
    MttHyperparams,
    PotentialTarget,
    TdoaMeasurementModel,
    TrackBuilder,
    XWEchoValidationError,
    detect_and_estimate,
    format_label,
    parse_label,
    predict,
    prune,
    systematic_resample,
)
@pytest.mark.xwecho_unit

class TestLabels:
    """Label text form."""

    def test_format_and_parse(self):
        assert format_label((12, 3, 0)) == "12-3-0"
        assert parse_label("12-3-0") == (12, 3, 0)

    def test_negative_fields(self):
        assert parse_label("0--1-0") == (0, -1, 0)

    def test_malformed_label(self):
        with pytest.raises(XWEchoValidationError):
            parse_label("12-3")
@pytest.mark.xwecho_unit

class TestPotentialTargets:
    """Prediction, pruning and detection."""

    def test_predict_moves_particles_and_scales_existence(self, rng):
        pt = PotentialTarget((0, 0, 0), np.array([[1e-4, 1e-6], [2e-4, -1e-6]]), existence=0.8)
        (moved,) = predict([pt], CvMotionModel(0.0), 0.9, 7.0, rng)
        assert np.allclose(moved.particles[:, 0], [1.07e-4, 1.93e-4])
        assert moved.existence == pytest.approx(0.72)

    def test_prune_drops_unlikely_targets(self, rng):
        pts = [
            PotentialTarget((0, 0, 0), np.zeros((4, 2)), existence=1e-8),
            PotentialTarget((0, 0, 1), np.zeros((4, 2)), existence=0.3),
        ]
        kept = prune(pts, threshold=1e-7, rng=rng)
        assert [pt.label for pt in kept] == [(0, 0, 1)]

    def test_prune_resamples_degenerate_cloud(self, rng):
        particles = np.arange(8.0).reshape(4, 2)
        pt = PotentialTarget((0, 0, 0), particles, np.array([0.97, 0.01, 0.01, 0.01]), existence=0.5)
        (kept,) = prune([pt], rng=rng)
        assert np.allclose(kept.weights, 0.25)
        assert (kept.particles[:, 0] == 0.0).sum() >= 3

    def test_detection_threshold_is_strict(self):
        pts = [
            PotentialTarget((0, 0, 0), np.array([[1.0, 0.0], [3.0, 0.0]]), existence=0.5),
            PotentialTarget((0, 0, 1), np.array([[1.0, 0.0], [3.0, 0.0]]), existence=0.6),
        ]
        detections = detect_and_estimate(pts, 0.5)
        assert [d.label for d in detections] == [(0, 0, 1)]
        assert detections[0].state.tolist() == [2.0, 0.0]

    def test_systematic_resample_counts(self, rng):
        idx = systematic_resample(np.array([0.5, 0.25, 0.25]), rng, 8)
        assert np.bincount(idx, minlength=3).tolist() == [4, 2, 2]
@pytest.mark.xwecho_unit

class TestEngine:
    """Sensor ordering and track assembly."""

    def _engine(self, order):
        models = {s: TdoaMeasurementModel(s, 1e-3, 1e-5) for s in (0, 1)}
        hp = MttHyperparams(num_particles=100)
        return MttEngine(CvMotionModel(1e-7, 1e-3), models, hp, 7.0, np.random.default_rng(0), sensor_order=order)

    def test_custom_sensor_order(self):
        engine = self._engine([1, 0])
        engine.step(0, {})
        assert [d.sensor for d in engine.diagnostics] == [1, 0]

    def test_default_sensor_order(self):
        engine = self._engine(None)
        engine.step(0, {})
        assert [d.sensor for d in engine.diagnostics] == [0, 1]

    def test_unknown_sensor_in_order(self):
        with pytest.raises(XWEchoValidationError):
            self._engine([0, 5])

    def test_track_builder_keeps_gaps_until_last_confirmation(self):
        builder = TrackBuilder(sensor=2)
        for step, existence in enumerate([0.9, 0.2, 0.8, 0.1]):
            builder.record(step, [PotentialTarget((0, 2, 0), np.zeros((2, 2)), existence=existence)])
        (track,) = builder.build(min_length=2)
        assert track.steps.tolist() == [0, 1, 2]
        assert track.name == "0-2-0"
        assert builder.build(min_length=4) == []
