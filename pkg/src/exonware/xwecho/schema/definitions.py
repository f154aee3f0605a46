"""
JSON-schema documents for xwecho configuration and geometry files.
"""

from typing import Any
_NUMBER: dict[str, Any] = {"type": "number"}
_PROBABILITY: dict[str, Any] = {"type": "number", "minimum": 0, "maximum": 1}
_NON_NEGATIVE: dict[str, Any] = {"type": "number", "minimum": 0}
_POSITIVE_INT: dict[str, Any] = {"type": "integer", "minimum": 1}
_POINT: dict[str, Any] = {"type": "array", "items": _NUMBER, "minItems": 3, "maxItems": 3}
HYPERPARAMETER_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "detection_probability": _PROBABILITY,
        "survival_probability": _PROBABILITY,
        "mean_false_positives": _NON_NEGATIVE,
        "mean_births": _NON_NEGATIVE,
        "measurement_std": _NON_NEGATIVE,
        "driving_std": _NON_NEGATIVE,
        "num_particles": _POSITIVE_INT,
        "min_track_length": _POSITIVE_INT,
        "existence_threshold": _PROBABILITY,
        "prune_threshold": _PROBABILITY,
        "spa_max_iterations": _POSITIVE_INT,
        "spa_tolerance": _NON_NEGATIVE,
        "association_solver": {"type": "string", "enum": ["spa", "exact", "auto"]},
        "exact_max_events": _POSITIVE_INT,
        "resample_ess_fraction": _PROBABILITY,
    },
}
GEOMETRY_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["arrays"],
    "properties": {
        "sound_speed": {"type": "number", "exclusiveMinimum": 0},
        "arrays": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["hydrophones"],
                "properties": {
                    "name": {"type": "string"},
                    "hydrophones": {"type": "array", "items": _POINT, "minItems": 4, "maxItems": 4},
                },
            },
        },
    },
}
CONFIG_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "signal": {
            "type": "object",
            "properties": {
                "nfft": {"type": "integer", "minimum": 8},
                "overlap": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
                "window": {"type": "string"},
                "weighting": {"type": "string", "enum": ["win", "scot", "phat", "none"]},
                "p_tdoa": _NON_NEGATIVE,
                "strong_peak_level": _NON_NEGATIVE,
                "echo_window": _NON_NEGATIVE,
                "template_period": {"type": "number", "exclusiveMinimum": 0},
                "subsample_interpolation": {"type": "boolean"},
                "noise_template_path": {"type": ["string", "null"]},
            },
        },
        "cluster": {
            "type": "object",
            "properties": {
                "step_length": {"type": "number", "exclusiveMinimum": 0},
                "cluster_samples": {"type": "integer", "minimum": 0},
            },
        },
        "tdoa": HYPERPARAMETER_SCHEMA,
        "tracking_3d": HYPERPARAMETER_SCHEMA,
        "tdoa_tracker": {"type": "object"},
        "tracker3d": {
            "type": "object",
            "properties": {
                "birth_box": {
                    "type": "array",
                    "minItems": 3,
                    "maxItems": 3,
                    "items": {"type": "array", "items": _NUMBER, "minItems": 2, "maxItems": 2},
                },
                "flow_steps": _POSITIVE_INT,
                "birth_velocity_std": _NON_NEGATIVE,
                "particle_flow": {"type": "boolean"},
                "apply_speed_pruning": {"type": "boolean"},
            },
        },
        "scenario": {
            "type": "object",
            "properties": {
                "n_whales": {"type": "integer", "minimum": 1, "maximum": 4},
                "n_steps": _POSITIVE_INT,
                "presence_length": _POSITIVE_INT,
                "stagger": {"type": "integer", "minimum": 0},
            },
        },
        "study": {
            "type": "object",
            "properties": {
                "runs": _POSITIVE_INT,
                "n_whales": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                "penalty": _NON_NEGATIVE,
                "nst_mode": {"type": "string", "enum": ["tdoa", "doa"]},
            },
        },
        "pipeline": {"type": "object"},
        "geometry": GEOMETRY_SCHEMA,
    },
}
