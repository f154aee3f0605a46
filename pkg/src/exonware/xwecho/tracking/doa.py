#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/tracking/doa.py
Direction of arrival from the six pair delays of one array (plane-wave
model) and triangulation of the rays of several arrays.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
import numpy as np
from exonware.xwsystem import get_logger
from ..defs import FloatArray
from ..errors import XWEchoNumericalError, XWEchoValidationError
from .geometry import ArrayGeometry
logger = get_logger(__name__)


@dataclass(frozen=True)
class Doa:
    """Unit vector toward the source; azimuth clockwise from north, elevation up (degrees)."""
    vector: FloatArray
    origin: FloatArray

    @property
    def azimuth(self) -> float:
        return float(np.degrees(np.arctan2(self.vector[0], self.vector[1])))

    @property
    def elevation(self) -> float:
        return float(np.degrees(np.arcsin(np.clip(self.vector[2], -1.0, 1.0))))


def estimate_doa(delays: Sequence[float], geometry: ArrayGeometry, array: int) -> Doa | None:
    """
    Least-squares direction from the pair delays of one array, ordered as its
    sensors; NaN marks a missing delay. Needs three delays.
    """
    sensors = geometry.sensors_of_array(array)
    d = np.asarray(delays, dtype=float)
    if d.size != len(sensors):
        raise XWEchoValidationError("One delay per sensor of the array required", field="delays", value=d.size)
    ok = np.isfinite(d)
    if ok.sum() < 3:
        return None
    rows = np.array([s.q2 - s.q1 for s in sensors])[ok]
    u, *_ = np.linalg.lstsq(rows, geometry.sound_speed * d[ok], rcond=None)
    norm = np.linalg.norm(u)
    if norm == 0.0:
        return None
    return Doa(u / norm, geometry.arrays[array].mean(axis=0))


def triangulate(rays: Sequence[Doa]) -> FloatArray:
    """Point closest (least squares) to all rays."""
    if len(rays) < 2:
        raise XWEchoValidationError("Triangulation needs two rays", field="rays", value=len(rays))
    a = np.zeros((3, 3))
    b = np.zeros(3)
    for ray in rays:
        proj = np.eye(3) - np.outer(ray.vector, ray.vector)
        a += proj
        b += proj @ ray.origin
    if np.linalg.cond(a) > 1e12:
        raise XWEchoNumericalError("Rays are parallel", operation="triangulate")
    return np.linalg.solve(a, b)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "Doa",
    "estimate_doa",
    "triangulate",
]
