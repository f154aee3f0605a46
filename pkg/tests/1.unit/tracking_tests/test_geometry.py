#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/tracking_tests/test_geometry.py
Unit tests for sensor geometry, the delay gradient and direction finding.
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
    ArrayGeometry,
    SensorGeometry,
    TdoaFunction,
    XWEchoGeometryError,
    XWEchoNumericalError,
    estimate_doa,
    load_geometry,
    predict_tdoa,
    predict_tdoa_batch,
    tdoa_gradient,
    tetrahedron,
    triangulate,
)
@pytest.mark.xwecho_unit

class TestDelayFunction:
    """Delay values and derivatives."""

    def test_gradient_matches_finite_differences(self, geometry, rng):
        points = rng.uniform([-800, -800, -1600], [800, 800, -600], size=(20, 3))
        h = 1e-2
        for sensor in geometry.sensors[:6]:
            grad = tdoa_gradient(points, sensor)
            for axis in range(3):
                step = np.zeros(3)
                step[axis] = h
                numeric = (predict_tdoa_batch(points + step, sensor) - predict_tdoa_batch(points - step, sensor)) / (2 * h)
                assert np.allclose(grad[:, axis], numeric, rtol=1e-5, atol=1e-13)

    def test_jacobian_pads_velocity(self, sensor):
        jac = TdoaFunction(sensor).jacobian(np.array([[10.0, 20.0, -500.0, 1.0, 1.0, 1.0]]))
        assert jac.shape == (1, 6)
        assert np.all(jac[:, 3:] == 0.0)

    def test_source_on_hydrophone_rejected(self, sensor):
        with pytest.raises(XWEchoNumericalError):
            predict_tdoa(sensor.q1, sensor)

    def test_coincident_pair_rejected(self):
        with pytest.raises(XWEchoGeometryError):
            SensorGeometry(0, np.zeros(3), np.zeros(3))

    def test_tetrahedron_edges(self):
        vertices = tetrahedron(2.0)
        edges = [np.linalg.norm(vertices[i] - vertices[j]) for i in range(4) for j in range(i + 1, 4)]
        assert np.allclose(edges, 2.0)
        assert np.allclose(vertices.mean(axis=0), 0.0)
@pytest.mark.xwecho_unit

class TestGeometryFile:
    """Geometry serialization."""

    def test_dict_round_trip(self, geometry):
        rebuilt = ArrayGeometry.from_dict(geometry.to_dict())
        assert rebuilt.names == geometry.names
        assert np.allclose(rebuilt.arrays[1], geometry.arrays[1])

    def test_load_json(self, tmp_path, geometry):
        import json
        path = tmp_path / "geometry.json"
        path.write_text(json.dumps(geometry.to_dict()), encoding="utf-8")
        loaded = load_geometry(path, validate=False)
        assert loaded.n_sensors == 12

    def test_unknown_sensor(self, geometry):
        with pytest.raises(XWEchoGeometryError):
            geometry.sensor(12)
@pytest.mark.xwecho_unit

class TestDirectionFinding:
    """Per-array DOA and triangulation."""

    def test_doa_points_at_source(self, geometry):
        source = np.array([200.0, 300.0, -900.0])
        delays = [predict_tdoa(source, s) for s in geometry.sensors_of_array(0)]
        doa = estimate_doa(delays, geometry, 0)
        expected = source - geometry.arrays[0].mean(axis=0)
        assert doa is not None
        assert doa.vector @ (expected / np.linalg.norm(expected)) > 0.999
        assert doa.elevation > 0.0

    def test_triangulation_near_source(self, geometry):
        source = np.array([200.0, 300.0, -900.0])
        rays = [
            estimate_doa([predict_tdoa(source, s) for s in geometry.sensors_of_array(a)], geometry, a)
            for a in (0, 1)
        ]
        assert np.linalg.norm(triangulate(rays) - source) < 10.0

    def test_doa_needs_three_delays(self, geometry):
        delays = [1e-4, np.nan, np.nan, np.nan, 2e-4, np.nan]
        assert estimate_doa(delays, geometry, 0) is None
