#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/__init__.py
XWEcho - Echolocation Click Tracking
This library detects and tracks echolocating odontocetes recorded on
hydrophone arrays:
- Signal: GCC with noise-template whitening, prefilter, ADCP removal, peaks
- Measurements: per-step TDOA measurement sets
- MTT: particle-based multi-target tracking with sum-product association
- Tracking: per-sensor TDOA tracks and 3-D tracks with particle flow
- Sim: synthetic scenarios, baselines and the Monte-Carlo study
- Pipeline: artifact-writing commands behind the xwecho CLI
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations

# Public API from facade
from exonware.xwecho.facade import (
    __version__,
    IConfigSchemaValidator,
    ConfigSchemaValidator,
    CONFIG_SCHEMA,
    GEOMETRY_SCHEMA,
    HYPERPARAMETER_SCHEMA,
    IMotionModel,
    IMeasurementFunction,
    IMeasurementModel,
    gaussian_pdf,
    AMotionModel,
    AMeasurementModel,
    XWEchoError,
    XWEchoValidationError,
    XWEchoConfigError,
    XWEchoSchemaError,
    XWEchoNumericalError,
    XWEchoGeometryError,
    FloatArray,
    IntArray,
    Label,
    MeasurementStream,
    ConfigData,
    WeightingKind,
    AssociationSolver,
    NstMode,
    TargetKind,
    TrackingMethod,
    ExitCode,
    SOUND_SPEED,
    DEFAULT_SAMPLE_RATE,
    DEFAULT_NFFT,
    DEFAULT_OVERLAP,
    DEFAULT_WINDOW,
    DEFAULT_TEMPLATE_PERIOD,
    DEFAULT_P_TDOA,
    DEFAULT_STRONG_PEAK,
    DEFAULT_ECHO_WINDOW,
    DEFAULT_STEP_LENGTH,
    DEFAULT_CLUSTER_SAMPLES,
    DEFAULT_PENALTY,
    PAIR_MAP,
    HYDROPHONES_PER_ARRAY,
    CSV_FLOAT_FORMAT,
    SignalConfig,
    ClusterConfig,
    MttHyperparams,
    TdoaTrackerConfig,
    Tracker3dConfig,
    ScenarioConfig,
    StudyConfig,
    PipelineConfig,
    XWEchoConfig,
    load_native,
    load_config,
    get_config,
    set_config,
    PEAK_COLUMNS,
    MEASUREMENT_COLUMNS,
    TDOA_TRACK_COLUMNS,
    TRACK3D_COLUMNS,
    TRAJECTORY_COLUMNS,
    TDOA_PROJECTION_COLUMNS,
    write_table,
    empty_table,
    read_table,
    TdoaMeasurementSet,
    accumulate,
    cluster_and_merge,
    build_measurement_sets,
    stream_from_sets,
    sets_from_stream,
    reverse_measurement_stream,
    measurements_to_frame,
    measurements_from_frame,
    write_measurements,
    read_measurements,
    SampledSignal,
    CrossPsd,
    Weighting,
    GccSequence,
    GccFrames,
    taper,
    lag_axis,
    to_two_sided,
    estimate_cross_psd,
    make_weighting,
    gcc,
    gcc_frames,
    frame_count,
    spectrogram,
    suppress_transients,
    NoiseTemplate,
    NoiseTemplateBank,
    estimate_noise_template,
    align_noise_template,
    design_highpass,
    prefilter_highpass,
    remove_adcp,
    TdoaPeak,
    extract_tdoa_peaks,
    peaks_to_frame,
    peaks_from_frame,
    read_audio,
    write_wave,
    write_raw,
    Detection,
    PotentialTarget,
    detect_and_estimate,
    format_label,
    parse_label,
    predict,
    prune,
    systematic_resample,
    FlowResult,
    FlowSettings,
    edh_flow,
    gaussian_fit,
    gaussian_logpdf,
    pseudo_time_steps,
    AssociationBelief,
    association_update,
    count_events,
    solve_association,
    solve_exact,
    solve_spa,
    Track,
    TrackBuilder,
    sort_tracks,
    MttEngine,
    StepDiagnostics,
    TrackerResult,
    run_tracker,
    ArrayGeometry,
    SensorGeometry,
    TdoaFunction,
    load_geometry,
    predict_tdoa,
    predict_tdoa_batch,
    tdoa_gradient,
    tetrahedron,
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
    Doa,
    estimate_doa,
    triangulate,
    CLUTTER,
    GroundTruth,
    SyntheticMeasurements,
    WhaleTruth,
    generate_scenario,
    synthesize_measurements,
    RmseResult,
    cardinality_stats,
    TrackMatch,
    match_tracks,
    rmse_with_penalty,
    localize,
    run_nst,
    run_sbt,
    RunOutcome,
    StudyResult,
    run_once,
    run_study,
    summarize,
    ClickSource,
    HarmonicNoise,
    gabor_click,
    render_channels,
    apply_hyperparameter_file,
    build_manifest,
    resolve_geometry,
    sha256_file,
    write_manifest,
    ExtractionResult,
    cmd_extract,
    cmd_pipeline,
    cmd_simulate,
    cmd_template,
    cmd_track,
    cmd_track_3d,
    cmd_track_tdoa,
    condition_channel,
    extract_tdoas,
    geometry_pairs,
    template_columns,
)
__all__ = [
    "__version__",
    "IConfigSchemaValidator",
    "ConfigSchemaValidator",
    "CONFIG_SCHEMA",
    "GEOMETRY_SCHEMA",
    "HYPERPARAMETER_SCHEMA",
    "IMotionModel",
    "IMeasurementFunction",
    "IMeasurementModel",
    "gaussian_pdf",
    "AMotionModel",
    "AMeasurementModel",
    "XWEchoError",
    "XWEchoValidationError",
    "XWEchoConfigError",
    "XWEchoSchemaError",
    "XWEchoNumericalError",
    "XWEchoGeometryError",
    "FloatArray",
    "IntArray",
    "Label",
    "MeasurementStream",
    "ConfigData",
    "WeightingKind",
    "AssociationSolver",
    "NstMode",
    "TargetKind",
    "TrackingMethod",
    "ExitCode",
    "SOUND_SPEED",
    "DEFAULT_SAMPLE_RATE",
    "DEFAULT_NFFT",
    "DEFAULT_OVERLAP",
    "DEFAULT_WINDOW",
    "DEFAULT_TEMPLATE_PERIOD",
    "DEFAULT_P_TDOA",
    "DEFAULT_STRONG_PEAK",
    "DEFAULT_ECHO_WINDOW",
    "DEFAULT_STEP_LENGTH",
    "DEFAULT_CLUSTER_SAMPLES",
    "DEFAULT_PENALTY",
    "PAIR_MAP",
    "HYDROPHONES_PER_ARRAY",
    "CSV_FLOAT_FORMAT",
    "SignalConfig",
    "ClusterConfig",
    "MttHyperparams",
    "TdoaTrackerConfig",
    "Tracker3dConfig",
    "ScenarioConfig",
    "StudyConfig",
    "PipelineConfig",
    "XWEchoConfig",
    "load_native",
    "load_config",
    "get_config",
    "set_config",
    "PEAK_COLUMNS",
    "MEASUREMENT_COLUMNS",
    "TDOA_TRACK_COLUMNS",
    "TRACK3D_COLUMNS",
    "TRAJECTORY_COLUMNS",
    "TDOA_PROJECTION_COLUMNS",
    "write_table",
    "empty_table",
    "read_table",
    "TdoaMeasurementSet",
    "accumulate",
    "cluster_and_merge",
    "build_measurement_sets",
    "stream_from_sets",
    "sets_from_stream",
    "reverse_measurement_stream",
    "measurements_to_frame",
    "measurements_from_frame",
    "write_measurements",
    "read_measurements",
    "SampledSignal",
    "CrossPsd",
    "Weighting",
    "GccSequence",
    "GccFrames",
    "taper",
    "lag_axis",
    "to_two_sided",
    "estimate_cross_psd",
    "make_weighting",
    "gcc",
    "gcc_frames",
    "frame_count",
    "spectrogram",
    "suppress_transients",
    "NoiseTemplate",
    "NoiseTemplateBank",
    "estimate_noise_template",
    "align_noise_template",
    "design_highpass",
    "prefilter_highpass",
    "remove_adcp",
    "TdoaPeak",
    "extract_tdoa_peaks",
    "peaks_to_frame",
    "peaks_from_frame",
    "read_audio",
    "write_wave",
    "write_raw",
    "Detection",
    "PotentialTarget",
    "detect_and_estimate",
    "format_label",
    "parse_label",
    "predict",
    "prune",
    "systematic_resample",
    "FlowResult",
    "FlowSettings",
    "edh_flow",
    "gaussian_fit",
    "gaussian_logpdf",
    "pseudo_time_steps",
    "AssociationBelief",
    "association_update",
    "count_events",
    "solve_association",
    "solve_exact",
    "solve_spa",
    "Track",
    "TrackBuilder",
    "sort_tracks",
    "MttEngine",
    "StepDiagnostics",
    "TrackerResult",
    "run_tracker",
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
    "CLUTTER",
    "GroundTruth",
    "SyntheticMeasurements",
    "WhaleTruth",
    "generate_scenario",
    "synthesize_measurements",
    "RmseResult",
    "cardinality_stats",
    "TrackMatch",
    "match_tracks",
    "rmse_with_penalty",
    "localize",
    "run_nst",
    "run_sbt",
    "RunOutcome",
    "StudyResult",
    "run_once",
    "run_study",
    "summarize",
    "ClickSource",
    "HarmonicNoise",
    "gabor_click",
    "render_channels",
    "apply_hyperparameter_file",
    "build_manifest",
    "resolve_geometry",
    "sha256_file",
    "write_manifest",
    "ExtractionResult",
    "cmd_extract",
    "cmd_pipeline",
    "cmd_simulate",
    "cmd_template",
    "cmd_track",
    "cmd_track_3d",
    "cmd_track_tdoa",
    "condition_channel",
    "extract_tdoas",
    "geometry_pairs",
    "template_columns",
]
