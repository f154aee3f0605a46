"""
#exonware/xwecho/src/exonware/xwecho/tracking/__init__.py
Array geometry, the per-sensor TDOA tracker, the 3-D tracker and DOA
utilities.
"""

from .geometry import (
    ArrayGeometry,
    SensorGeometry,
    TdoaFunction,
    load_geometry,
    predict_tdoa,
    predict_tdoa_batch,
    tdoa_gradient,
    tetrahedron,
)
from .tdoa import (
    CvMotionModel,
    TdoaMeasurementModel,
    collect_tracks,
    cv_predict,
    tdoa_likelihood,
    tdoa_tracks_to_frame,
    track_all_sensors,
    track_sensor,
    tracks_to_measurement_sets,
    write_tdoa_tracks,
)
from .tracker3d import (
    BirthRegionSampler,
    KinematicMotionModel,
    Tdoa3dMeasurementModel,
    build_models,
    kinematic_predict,
    particle_flow_update,
    project_track_to_tdoa,
    prune_tracks_speed,
    track_3d,
    tracks3d_to_frame,
    trajectory_frame,
    write_tracks3d,
)
from .doa import Doa, estimate_doa, triangulate
__all__ = [
    "ArrayGeometry",
    "SensorGeometry",
    "TdoaFunction",
    "load_geometry",
    "predict_tdoa",
    "predict_tdoa_batch",
    "tdoa_gradient",
    "tetrahedron",
    "CvMotionModel",
    "TdoaMeasurementModel",
    "collect_tracks",
    "cv_predict",
    "tdoa_likelihood",
    "tdoa_tracks_to_frame",
    "track_all_sensors",
    "track_sensor",
    "tracks_to_measurement_sets",
    "write_tdoa_tracks",
    "BirthRegionSampler",
    "KinematicMotionModel",
    "Tdoa3dMeasurementModel",
    "build_models",
    "kinematic_predict",
    "particle_flow_update",
    "project_track_to_tdoa",
    "prune_tracks_speed",
    "track_3d",
    "tracks3d_to_frame",
    "trajectory_frame",
    "write_tracks3d",
    "Doa",
    "estimate_doa",
    "triangulate",
]
