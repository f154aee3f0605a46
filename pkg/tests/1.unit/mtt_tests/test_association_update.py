#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/mtt_tests/test_association_update.py
Unit tests for the per-sensor association update.
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
    MttHyperparams,
    PotentialTarget,
    TargetKind,
    TdoaMeasurementModel,
    association_update,
    count_events,
)
MAX_DELAY = 1e-3
NOISE = 1e-5


def _cloud(rng: np.random.Generator, delay: float, std: float, n: int) -> np.ndarray:
    particles = np.empty((n, 2))
    particles[:, 0] = rng.normal(delay, std, n)
    particles[:, 1] = rng.normal(0.0, 1e-6, n)
    return particles
@pytest.mark.xwecho_unit

class TestAssociationUpdate:
    """Single-sensor belief propagation step."""

    def test_single_target_matches_kalman_update(self):
        """Detection certain and no clutter reduces the update to Bayes on one measurement."""
        rng = np.random.default_rng(11)
        prior_mean, prior_std, z = 1e-4, 2e-5, 1.2e-4
        pt = PotentialTarget((0, 0, 0), _cloud(rng, prior_mean, prior_std, 20_000), existence=1.0)
        hp = MttHyperparams(detection_probability=1.0, mean_false_positives=0.0, mean_births=0.0, num_particles=20_000)
        model = TdoaMeasurementModel(0, MAX_DELAY, NOISE)
        _, legacy, new = association_update([pt], np.array([z]), model, hp, step=1, rng=rng)
        gain = prior_std**2 / (prior_std**2 + NOISE**2)
        post_mean = prior_mean + gain * (z - prior_mean)
        post_std = np.sqrt((1.0 - gain) * prior_std**2)
        updated = legacy[0]
        assert new == []
        assert updated.existence == pytest.approx(1.0)
        assert abs(updated.mean()[0] - post_mean) < 0.1 * post_std
        assert np.sqrt(updated.covariance()[0, 0]) == pytest.approx(post_std, rel=0.1)

    def test_well_separated_targets_keep_identity(self):
        rng = np.random.default_rng(12)
        pts = [
            PotentialTarget((0, 0, 0), _cloud(rng, 1e-4, 5e-6, 2000), existence=0.9),
            PotentialTarget((0, 0, 1), _cloud(rng, -3e-4, 5e-6, 2000), existence=0.9),
        ]
        hp = MttHyperparams(mean_false_positives=1.0, mean_births=1e-4, num_particles=500)
        model = TdoaMeasurementModel(0, MAX_DELAY, NOISE)
        belief, legacy, new = association_update(pts, np.array([0.99e-4, -2.99e-4]), model, hp, 3, rng)
        assert belief.legacy[0, 2] > 0.99
        assert belief.legacy[1, 1] > 0.99
        assert [pt.existence > 0.99 for pt in legacy] == [True, True]
        assert [pt.label for pt in new] == [(3, 0, 0), (3, 0, 1)]
        assert all(pt.kind is TargetKind.NEW for pt in new)
        assert all(pt.existence < 1e-3 for pt in new)

    def test_out_of_support_measurement_is_clutter(self):
        rng = np.random.default_rng(13)
        hp = MttHyperparams(num_particles=200)
        model = TdoaMeasurementModel(0, MAX_DELAY, NOISE)
        _, legacy, new = association_update([], np.array([5e-3]), model, hp, 0, rng)
        assert legacy == [] and new == []

    def test_missed_detection_lowers_existence(self):
        rng = np.random.default_rng(14)
        pt = PotentialTarget((0, 0, 0), _cloud(rng, 0.0, 5e-6, 1000), existence=0.9)
        hp = MttHyperparams(detection_probability=0.8, num_particles=100)
        _, legacy, _ = association_update([pt], np.zeros(0), TdoaMeasurementModel(0, MAX_DELAY, NOISE), hp, 0, rng)
        expected = 0.9 * 0.2 / (0.1 + 0.9 * 0.2)
        assert legacy[0].existence == pytest.approx(expected, rel=1e-9)

    def test_event_count(self):
        assert count_events(2, 2) == 7
        assert count_events(3, 1) == 4
        assert count_events(10, 10, limit=100) > 100
