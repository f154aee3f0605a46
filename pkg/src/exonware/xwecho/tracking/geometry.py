#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/tracking/geometry.py
Hydrophone array geometry and the TDOA measurement function.
A TDOA sensor is an ordered hydrophone pair (q1, q2) of one array; the
delay of a source at p is (|p - q1| - |p - q2|) / c, positive when the
click reaches the second hydrophone first.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence
import numpy as np
from exonware.xwsystem import get_logger
from ..defs import FloatArray, HYDROPHONES_PER_ARRAY, PAIR_MAP, SOUND_SPEED
from ..errors import XWEchoGeometryError, XWEchoNumericalError, XWEchoValidationError
logger = get_logger(__name__)
_COINCIDENCE = 1e-9
# ==============================================================================
# SENSORS
# ==============================================================================


@dataclass(frozen=True)
class SensorGeometry:
    """One TDOA sensor: hydrophone positions in ENU metres and the sound speed."""
    index: int
    q1: FloatArray
    q2: FloatArray
    sound_speed: float = SOUND_SPEED
    array: int = 0
    pair: tuple[int, int] = (0, 1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q1", np.asarray(self.q1, dtype=float).reshape(3))
        object.__setattr__(self, "q2", np.asarray(self.q2, dtype=float).reshape(3))
        if self.sound_speed <= 0.0:
            raise XWEchoValidationError("Sound speed must be positive", field="sound_speed", value=self.sound_speed)
        if self.baseline <= 0.0:
            raise XWEchoGeometryError("Hydrophones of a pair coincide", sensor=self.index)

    @property
    def baseline(self) -> float:
        return float(np.linalg.norm(self.q1 - self.q2))

    @property
    def max_delay(self) -> float:
        """T_max = |q1 - q2| / c."""
        return self.baseline / self.sound_speed


def predict_tdoa_batch(positions: FloatArray, sensor: SensorGeometry) -> FloatArray:
    """
    Delays of many positions (n, >=3); only the first three columns are used.
    Distances are floored instead of rejected so particle clouds never fail.
    """
    p = np.atleast_2d(np.asarray(positions, dtype=float))[:, :3]
    r1 = np.maximum(np.linalg.norm(p - sensor.q1, axis=1), _COINCIDENCE)
    r2 = np.maximum(np.linalg.norm(p - sensor.q2, axis=1), _COINCIDENCE)
    # Difference of distances written as a ratio; avoids cancellation far from the pair.
    delays = ((sensor.q2 - sensor.q1) @ (2.0 * p - sensor.q1 - sensor.q2).T) / ((r1 + r2) * sensor.sound_speed)
    return np.clip(delays, -sensor.max_delay, sensor.max_delay)


def predict_tdoa(position: FloatArray, sensor: SensorGeometry) -> float:
    """Delay in seconds of a source at position (x, y, z, ...)."""
    p = np.asarray(position, dtype=float).ravel()[:3]
    if min(np.linalg.norm(p - sensor.q1), np.linalg.norm(p - sensor.q2)) < _COINCIDENCE:
        raise XWEchoNumericalError("Source coincides with a hydrophone", operation="predict_tdoa")
    return float(predict_tdoa_batch(p[None, :], sensor)[0])


def tdoa_gradient(positions: FloatArray, sensor: SensorGeometry) -> FloatArray:
    """Gradient of the delay with respect to position, shape (n, 3)."""
    p = np.atleast_2d(np.asarray(positions, dtype=float))[:, :3]
    d1 = p - sensor.q1
    d2 = p - sensor.q2
    r1 = np.maximum(np.linalg.norm(d1, axis=1, keepdims=True), _COINCIDENCE)
    r2 = np.maximum(np.linalg.norm(d2, axis=1, keepdims=True), _COINCIDENCE)
    return (d1 / r1 - d2 / r2) / sensor.sound_speed


class TdoaFunction:
    """Delay of one sensor as a function of the kinematic state (position first)."""

    def __init__(self, sensor: SensorGeometry, state_dim: int = 6):
        self.sensor = sensor
        self.state_dim = state_dim

    def evaluate(self, states: FloatArray) -> FloatArray:
        return predict_tdoa_batch(states, self.sensor)

    def jacobian(self, states: FloatArray) -> FloatArray:
        states = np.atleast_2d(states)
        jac = np.zeros((len(states), self.state_dim))
        jac[:, :3] = tdoa_gradient(states, self.sensor)
        return jac
# ==============================================================================
# ARRAYS
# ==============================================================================


def tetrahedron(edge: float = 1.0, center: Sequence[float] = (0.0, 0.0, 0.0)) -> FloatArray:
    """Regular tetrahedron vertices (4, 3) centred on center."""
    vertices = np.array(
        [
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.5, np.sqrt(3.0) / 2.0, 0.0],
            [0.5, np.sqrt(3.0) / 6.0, np.sqrt(2.0 / 3.0)],
        ]
    ) * edge
    return vertices - vertices.mean(axis=0) + np.asarray(center, dtype=float)


@dataclass
class ArrayGeometry:
    """
    Four-hydrophone arrays and their six pair sensors each.
    Sensor index = array index * 6 + pair index, pairs ordered as PAIR_MAP.
    """
    arrays: list[FloatArray]
    names: list[str] = field(default_factory=list)
    sound_speed: float = SOUND_SPEED

    def __post_init__(self) -> None:
        self.arrays = [np.asarray(a, dtype=float) for a in self.arrays]
        for i, a in enumerate(self.arrays):
            if a.shape != (HYDROPHONES_PER_ARRAY, 3):
                raise XWEchoGeometryError(f"Array {i} needs {HYDROPHONES_PER_ARRAY} hydrophones with 3 coordinates")
        if not self.names:
            self.names = [f"array{i}" for i in range(len(self.arrays))]
        self._sensors = [
            SensorGeometry(a * len(PAIR_MAP) + k, hyd[i], hyd[j], self.sound_speed, a, (i, j))
            for a, hyd in enumerate(self.arrays)
            for k, (i, j) in enumerate(PAIR_MAP)
        ]
    @classmethod

    def two_array_default(
        cls,
        separation: float = 1000.0,
        depth: float = -1330.0,
        edge: float = 1.0,
        sound_speed: float = SOUND_SPEED,
    ) -> "ArrayGeometry":
        """Two tetrahedral arrays on the x axis, separation metres apart."""
        half = separation / 2.0
        return cls(
            [tetrahedron(edge, (-half, 0.0, depth)), tetrahedron(edge, (half, 0.0, depth))],
            ["west", "east"],
            sound_speed,
        )
    @classmethod

    def from_dict(cls, data: dict[str, Any]) -> "ArrayGeometry":
        arrays = data.get("arrays") or []
        return cls(
            [a["hydrophones"] for a in arrays],
            [a.get("name", f"array{i}") for i, a in enumerate(arrays)],
            float(data.get("sound_speed", SOUND_SPEED)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "sound_speed": self.sound_speed,
            "arrays": [
                {"name": name, "hydrophones": a.tolist()} for name, a in zip(self.names, self.arrays)
            ],
        }

    @property
    def sensors(self) -> list[SensorGeometry]:
        return list(self._sensors)

    @property
    def n_sensors(self) -> int:
        return len(self._sensors)

    def sensor(self, index: int) -> SensorGeometry:
        if not 0 <= index < len(self._sensors):
            raise XWEchoGeometryError("Sensor index not in geometry", sensor=index)
        return self._sensors[index]

    def sensors_of_array(self, array: int) -> list[SensorGeometry]:
        return [s for s in self._sensors if s.array == array]

    @property
    def center(self) -> FloatArray:
        return np.vstack(self.arrays).mean(axis=0)


def load_geometry(path: str | Path, validate: bool = True) -> ArrayGeometry:
    """Read a geometry file (any format XWData loads) and build the arrays."""
    from ..config import load_native
    native = load_native(path)
    if isinstance(native, dict) and "geometry" in native and "arrays" not in native:
        native = native["geometry"]
    if validate:
        from ..schema import ConfigSchemaValidator, GEOMETRY_SCHEMA
        ConfigSchemaValidator(GEOMETRY_SCHEMA).check(native, source=str(path))
    geometry = ArrayGeometry.from_dict(native)
    logger.info(f"Loaded geometry with {len(geometry.arrays)} arrays from {path}")
    return geometry
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "SensorGeometry",
    "predict_tdoa",
    "predict_tdoa_batch",
    "tdoa_gradient",
    "TdoaFunction",
    "tetrahedron",
    "ArrayGeometry",
    "load_geometry",
]
