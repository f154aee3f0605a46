#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/mtt_tests/test_flow.py
Unit tests for particle flow.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest
from exonware.xwecho import XWEchoValidationError, edh_flow, gaussian_fit, gaussian_logpdf, pseudo_time_steps


class _Identity:
    """h(x) = x for a scalar state."""

    def evaluate(self, states):
        return np.atleast_2d(states)[:, 0]

    def jacobian(self, states):
        return np.ones((len(np.atleast_2d(states)), 1))
@pytest.mark.xwecho_unit

class TestParticleFlow:
    """Exact Daum-Huang flow on linear Gaussian problems."""

    def test_linear_gaussian_posterior(self):
        """Prior N(0, 1), z = 1, R = 1 gives the N(0.5, 0.5) posterior."""
        rng = np.random.default_rng(21)
        particles = rng.normal(0.0, 1.0, size=(100_000, 1))
        result = edh_flow(particles, 1.0, _Identity(), 1.0)
        mean, cov = gaussian_fit(result.particles, result.weights)
        assert mean[0] == pytest.approx(0.5, rel=0.01)
        assert cov[0, 0] == pytest.approx(0.5, rel=0.01)

    def test_infinite_noise_leaves_particles(self, rng):
        particles = rng.normal(size=(50, 1))
        result = edh_flow(particles, 3.0, _Identity(), np.inf)
        assert np.array_equal(result.particles, particles)
        assert np.allclose(result.weights, 1.0 / 50)

    def test_non_positive_noise_rejected(self, rng):
        with pytest.raises(XWEchoValidationError):
            edh_flow(rng.normal(size=(10, 1)), 0.0, _Identity(), 0.0)

    def test_pseudo_time_steps(self):
        eps = pseudo_time_steps(25, 1.2)
        assert eps.sum() == pytest.approx(1.0)
        assert eps[1] / eps[0] == pytest.approx(1.2)
        assert np.allclose(pseudo_time_steps(4, 1.0), 0.25)


class _FirstCoordinate:
    """h(x) = x[0] for a kinematic state."""

    def evaluate(self, states):
        return np.atleast_2d(states)[:, 0]

    def jacobian(self, states):
        rows = np.zeros_like(np.atleast_2d(states), dtype=float)
        rows[:, 0] = 1.0
        return rows


def _kinematic_cloud(rng, n: int = 5000) -> np.ndarray:
    """Positions spread over hundreds of metres, velocities over millimetres per second."""
    positions = rng.normal(0.0, 300.0, size=(n, 3))
    velocities = rng.normal(0.0, 1e-3, size=(n, 3))
    return np.hstack([positions, velocities])
@pytest.mark.xwecho_unit

class TestBadlyScaledClouds:
    """Gaussian fit and flow on clouds whose variances span many decades."""

    def test_fit_is_positive_definite(self, rng):
        cloud = _kinematic_cloud(rng)
        _, cov = gaussian_fit(cloud, np.full(len(cloud), 1.0 / len(cloud)))
        assert np.all(np.linalg.eigvalsh(cov) > 0.0)
        assert np.diag(cov)[3:] == pytest.approx(np.full(3, 1e-6), rel=0.1)

    def test_logpdf_matches_reference(self, rng):
        from scipy.stats import multivariate_normal
        mean = np.array([1.0, -2.0])
        cov = np.array([[2.0, 0.3], [0.3, 0.5]])
        points = rng.normal(size=(20, 2))
        expected = multivariate_normal(mean=mean, cov=cov).logpdf(points)
        assert np.allclose(gaussian_logpdf(points, mean, cov), expected)

    def test_flow_keeps_finite_weights(self, rng):
        cloud = _kinematic_cloud(rng)
        result = edh_flow(cloud, 50.0, _FirstCoordinate(), 3.0)
        assert np.all(np.isfinite(result.particles))
        assert np.all(np.isfinite(result.log_correction))
        assert result.weights.sum() == pytest.approx(1.0)
        mean, _ = gaussian_fit(result.particles, result.weights)
        assert mean[0] == pytest.approx(50.0, abs=1.0)
