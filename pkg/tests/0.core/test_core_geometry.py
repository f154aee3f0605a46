#!/usr/bin/env python3
"""
#exonware/xwecho/tests/0.core/test_core_geometry.py
Core geometry checks: delay bounds and the delay function.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest
from exonware.xwecho import PAIR_MAP, predict_tdoa, predict_tdoa_batch
@pytest.mark.xwecho_core

class TestCoreGeometry:
    """Sensor geometry of the default two-array deployment."""

    def test_default_geometry_has_twelve_sensors(self, geometry):
        assert geometry.n_sensors == 2 * len(PAIR_MAP)
        assert [s.pair for s in geometry.sensors_of_array(1)] == list(PAIR_MAP)

    def test_max_delay_of_one_metre_pair(self, geometry):
        """Every pair of a unit tetrahedron has T_max = 1 / 1490 s."""
        for sensor in geometry.sensors:
            assert sensor.max_delay == pytest.approx(6.7114e-4, rel=1e-4)

    def test_predicted_delay_matches_distances(self, geometry, rng):
        """(|p - q1| - |p - q2|) / c agrees with the stable ratio form."""
        points = rng.uniform([-1000, -1000, -1800], [1000, 1000, -500], size=(200, 3))
        for sensor in geometry.sensors:
            direct = (
                np.linalg.norm(points - sensor.q1, axis=1) - np.linalg.norm(points - sensor.q2, axis=1)
            ) / sensor.sound_speed
            assert np.max(np.abs(predict_tdoa_batch(points, sensor) - direct)) < 1e-12

    def test_delay_positive_when_second_hydrophone_closer(self, geometry):
        sensor = geometry.sensor(0)
        near_q2 = sensor.q2 + 10.0 * (sensor.q2 - sensor.q1)
        assert predict_tdoa(near_q2, sensor) == pytest.approx(sensor.max_delay, rel=1e-6)
        assert abs(predict_tdoa(near_q2, sensor)) <= sensor.max_delay
