#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/config.py
XWEcho Configuration
This module provides the configuration dataclasses for the signal chain,
measurement clustering, the two tracking stages, the simulation study and
the pipeline commands. Configuration files are loaded through XWData and
validated through XWSchema before they reach these classes.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import asyncio
import concurrent.futures
from dataclasses import dataclass, field, fields, asdict
from enum import Enum
from pathlib import Path
from typing import Any, TypeVar
from exonware.xwsystem import get_logger
from .defs import (
    AssociationSolver,
    NstMode,
    WeightingKind,
    DEFAULT_CLUSTER_SAMPLES,
    DEFAULT_ECHO_WINDOW,
    DEFAULT_NFFT,
    DEFAULT_OVERLAP,
    DEFAULT_PENALTY,
    DEFAULT_P_TDOA,
    DEFAULT_STEP_LENGTH,
    DEFAULT_STRONG_PEAK,
    DEFAULT_TEMPLATE_PERIOD,
    DEFAULT_WINDOW,
)
from .errors import XWEchoConfigError
logger = get_logger(__name__)
_C = TypeVar("_C")


def _from_known(cls: type[_C], config_dict: dict[str, Any]) -> _C:
    """Build a config dataclass from the known keys of a dict, coercing enums and tuples."""
    filtered: dict[str, Any] = {}
    for f in fields(cls):  # type: ignore[arg-type]
        if f.name not in config_dict:
            continue
        value = config_dict[f.name]
        default = getattr(cls(), f.name)
        if isinstance(default, Enum) and isinstance(value, str):
            try:
                value = type(default)(value)
            except ValueError as e:
                raise XWEchoConfigError(
                    f"Invalid value {value!r} for {f.name}", key=f.name, cause=e
                ) from e
        elif isinstance(default, tuple) and isinstance(value, list):
            value = tuple(tuple(v) if isinstance(v, list) else v for v in value)
        filtered[f.name] = value
    return cls(**filtered)


def _to_plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, tuple):
        return [_to_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _to_plain(v) for k, v in value.items()}
    return value
# ==============================================================================
# SIGNAL CHAIN
# ==============================================================================
@dataclass

class SignalConfig:
    """
    Configuration for spectral estimation, weighting, prefiltering,
    interference removal and peak extraction.
    """
    nfft: int = DEFAULT_NFFT
    """GCC frame length N_G in samples (T_G = nfft / fs)."""
    overlap: float = DEFAULT_OVERLAP
    """Fractional overlap of consecutive frames."""
    window: str = DEFAULT_WINDOW
    """Taper name understood by scipy.signal.get_window."""
    weighting: WeightingKind = WeightingKind.WIN
    """GCC frequency weighting."""
    p_tdoa: float = DEFAULT_P_TDOA
    """Peak detection threshold on the GCC amplitude."""
    strong_peak_level: float = DEFAULT_STRONG_PEAK
    """Amplitude above which later frames inside the echo window are ignored."""
    echo_window: float = DEFAULT_ECHO_WINDOW
    """Echo suppression window after a strong peak, seconds."""
    prefilter_stop_hz: float = 13_000.0
    prefilter_pass_hz: float = 15_000.0
    prefilter_numtaps: int = 129
    """Equiripple highpass length (odd)."""
    adcp_center_hz: float = 25_000.0
    adcp_half_band_hz: float = 2_000.0
    adcp_threshold: float = 6.0
    """Multiple of the running median band energy that flags a pulse."""
    adcp_band_fraction: float = 0.5
    """Minimum share of block energy inside the pulse band."""
    adcp_block: float = 1e-3
    """Energy block length, seconds."""
    adcp_median_window: float = 1.0
    """Running-median window, seconds."""
    adcp_min_duration: float = 3e-3
    """Shortest flagged run treated as a pulse, seconds."""
    adcp_pad: float = 5e-3
    """Padding added on both sides of a nulled pulse, seconds."""
    transient_window: float = 1e-3
    """Moving-average window of the transient suppressor, seconds."""
    template_period: float = DEFAULT_TEMPLATE_PERIOD
    """Period of the instrument noise pattern, seconds."""
    psd_floor: float = 1e-12
    """Relative floor applied to weighting denominators."""
    subsample_interpolation: bool = False
    """Parabolic refinement of peak lags."""
    noise_template_path: str | None = None
    """Noise template bank (.npz) required by the WIN weighting."""

    @property
    def hop(self) -> int:
        """Frame advance in samples."""
        return max(1, int(round(self.nfft * (1.0 - self.overlap))))
    @classmethod

    def default(cls) -> "SignalConfig":
        """Get default configuration instance."""
        return cls()
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "SignalConfig":
        """Create configuration from dictionary (unknown keys are ignored)."""
        return _from_known(cls, config_dict)

    def to_dict(self) -> dict[str, Any]:
        """Convert configuration to dictionary."""
        return _to_plain(asdict(self))
# ==============================================================================
# MEASUREMENT FORMATION
# ==============================================================================
@dataclass

class ClusterConfig:
    """Accumulation and clustering of peaks into measurements."""
    step_length: float = DEFAULT_STEP_LENGTH
    """Tracking step T_M, seconds."""
    cluster_samples: int = DEFAULT_CLUSTER_SAMPLES
    """Chaining distance n_c, samples."""
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "ClusterConfig":
        return _from_known(cls, config_dict)

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))
# ==============================================================================
# MULTI-TARGET TRACKING
# ==============================================================================
@dataclass

class MttHyperparams:
    """
    Hyperparameters of the sum-product multi-target tracker.
    The two classmethods return the parameter columns used for per-sensor
    TDOA tracking and for 3-D tracking.
    """
    detection_probability: float = 0.8
    """p_d, identical for every sensor."""
    survival_probability: float = 0.9
    """p_su."""
    mean_false_positives: float = 10.0
    """mu_fp per sensor and step; false positives are uniform on the sensor support."""
    mean_births: float = 1e-4
    """mu_b per sensor and step; births are uniform on the birth region."""
    measurement_std: float = 1e-5
    """Measurement noise std, seconds."""
    driving_std: float = 1.5e-7
    """Motion-model driving noise std."""
    num_particles: int = 30_000
    min_track_length: int = 20
    existence_threshold: float = 0.5
    """P_th for declaring a potential target to exist."""
    prune_threshold: float = 1e-4
    spa_max_iterations: int = 200
    spa_tolerance: float = 1e-6
    association_solver: AssociationSolver = AssociationSolver.AUTO
    exact_max_events: int = 4096
    """Largest joint-event count solved by enumeration under the AUTO solver."""
    resample_ess_fraction: float = 0.5
    """Resample when ESS falls below this fraction of the particle count."""

    def __post_init__(self) -> None:
        for name in ("detection_probability", "survival_probability", "existence_threshold"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise XWEchoConfigError(f"{name} must lie in [0, 1], got {value}", key=name)
        for name in ("mean_false_positives", "mean_births", "measurement_std", "driving_std"):
            if getattr(self, name) < 0.0:
                raise XWEchoConfigError(f"{name} must be non-negative", key=name)
        if self.num_particles < 1:
            raise XWEchoConfigError("num_particles must be positive", key="num_particles")
    @classmethod

    def tdoa_default(cls) -> "MttHyperparams":
        """Parameters for per-sensor tracking in the delay domain."""
        return cls(
            detection_probability=0.8,
            survival_probability=0.9,
            mean_false_positives=10.0,
            mean_births=1e-4,
            measurement_std=1e-5,
            driving_std=1.5e-7,
            num_particles=30_000,
            min_track_length=20,
            prune_threshold=1e-7,
        )
    @classmethod

    def tracking3d_default(cls) -> "MttHyperparams":
        """Parameters for the fused 3-D stage."""
        return cls(
            detection_probability=0.8,
            survival_probability=0.99,
            mean_false_positives=1.0,
            mean_births=1.0,
            measurement_std=3e-5,
            driving_std=1e-2,
            num_particles=100_000,
            min_track_length=5,
            prune_threshold=1e-4,
        )
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "MttHyperparams":
        return _from_known(cls, config_dict)

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))


@dataclass
class TdoaTrackerConfig:
    """Delay-domain model settings beyond the hyperparameters."""
    rate_prior_fraction: float = 0.01
    """Birth std of the delay rate as a fraction of T_max (per second)."""
    workers: int = 1
    """Sensors tracked concurrently."""
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "TdoaTrackerConfig":
        return _from_known(cls, config_dict)

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))


@dataclass
class Tracker3dConfig:
    """
    3-D stage settings: birth region, particle flow and track pruning.
    """
    birth_box: tuple[tuple[float, float], ...] = (
        (-1000.0, 1000.0),
        (-1000.0, 1000.0),
        (-1800.0, -500.0),
    )
    """Uniform birth region per ENU axis, metres."""
    birth_velocity_std: float = 1.0
    """Zero-mean Gaussian birth prior of each velocity component, m/s."""
    birth_pool_size: int = 300_000
    """Uniform birth-region samples shared by all sensors of a step."""
    flow_steps: int = 25
    """Pseudo-time steps N_lambda."""
    flow_step_ratio: float = 1.2
    """Ratio between consecutive pseudo-time step sizes."""
    flow_association_threshold: float = 0.5
    """Association probability (given existence) above which particles flow toward a measurement."""
    particle_flow: bool = True
    """Migrate particles by particle flow; plain reweighting when off."""
    max_median_speed: float = 2.0
    max_step_speed: float = 3.5
    min_pruned_length: int = 5
    apply_speed_pruning: bool = True
    sensor_order: tuple[int, ...] | None = None
    """Sensor processing order within a step; ascending index when unset."""
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "Tracker3dConfig":
        cfg = _from_known(cls, config_dict)
        if cfg.sensor_order is not None:
            cfg.sensor_order = tuple(int(s) for s in cfg.sensor_order)
        return cfg

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))
# ==============================================================================
# SIMULATION
# ==============================================================================
@dataclass

class ScenarioConfig:
    """
    Monte-Carlo scenario: staggered whales starting on a circle above the arrays.
    """
    n_whales: int = 1
    n_steps: int = 85
    step_length: float = DEFAULT_STEP_LENGTH
    presence_length: int = 50
    stagger: int = 10
    start_radius: float = 1000.0
    start_depth: float = 1000.0
    initial_speed_std: float = 0.78
    """Per-axis std of the initial velocity; median speed is about 1.2 m/s."""
    hp: MttHyperparams = field(default_factory=MttHyperparams.tracking3d_default)
    """Synthesis uses p_d, mu_fp, measurement_std and driving_std from here."""

    def __post_init__(self) -> None:
        if self.n_whales < 1:
            raise XWEchoConfigError("n_whales must be at least 1", key="n_whales")
        if self.stagger * (self.n_whales - 1) + self.presence_length > self.n_steps:
            raise XWEchoConfigError(
                f"{self.n_whales} whales staggered by {self.stagger} steps do not fit "
                f"in {self.n_steps} steps",
                key="n_steps",
            )
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "ScenarioConfig":
        data = dict(config_dict)
        hp = data.pop("hp", None)
        base = {k: v for k, v in data.items() if k in {f.name for f in fields(cls)}}
        if isinstance(hp, dict):
            merged = MttHyperparams.tracking3d_default().to_dict()
            merged.update(hp)
            base["hp"] = MttHyperparams.from_dict(merged)
        return cls(**base)

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))


@dataclass
class StudyConfig:
    """Monte-Carlo study protocol."""
    n_whales: tuple[int, ...] = (1, 2, 3, 4)
    runs: int = 200
    base_seed: int = 0
    num_particles: int = 10_000
    """3-D particle count used by MTT and SBT in the study."""
    penalty: float = DEFAULT_PENALTY
    nst_mode: NstMode = NstMode.TDOA
    workers: int = 1
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "StudyConfig":
        cfg = _from_known(cls, config_dict)
        cfg.n_whales = tuple(int(n) for n in cfg.n_whales)
        return cfg

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))
# ==============================================================================
# PIPELINE
# ==============================================================================
@dataclass

class PipelineConfig:
    """Paths, seed and run options shared by the subcommands."""
    geometry_path: str | None = None
    """Geometry file; the two-array default geometry when unset."""
    hyperparameter_path: str | None = None
    """Optional file holding tdoa / tracking_3d hyperparameter sections."""
    output_dir: str = "xwecho_out"
    seed: int | None = None
    """Random seed; unset means 0 for tracking and the study's own base seed for simulate."""
    reverse_time: bool = False

    @property
    def rng_seed(self) -> int:
        return 0 if self.seed is None else int(self.seed)
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "PipelineConfig":
        return _from_known(cls, config_dict)

    def to_dict(self) -> dict[str, Any]:
        return _to_plain(asdict(self))
# ==============================================================================
# AGGREGATE
# ==============================================================================
_SECTIONS: dict[str, Any] = {
    "signal": SignalConfig,
    "cluster": ClusterConfig,
    "tdoa_tracker": TdoaTrackerConfig,
    "tracker3d": Tracker3dConfig,
    "scenario": ScenarioConfig,
    "study": StudyConfig,
    "pipeline": PipelineConfig,
}


@dataclass
class XWEchoConfig:
    """
    Aggregate configuration; one section per component.
    """
    signal: SignalConfig = field(default_factory=SignalConfig)
    cluster: ClusterConfig = field(default_factory=ClusterConfig)
    tdoa: MttHyperparams = field(default_factory=MttHyperparams.tdoa_default)
    tracking_3d: MttHyperparams = field(default_factory=MttHyperparams.tracking3d_default)
    tdoa_tracker: TdoaTrackerConfig = field(default_factory=TdoaTrackerConfig)
    tracker3d: Tracker3dConfig = field(default_factory=Tracker3dConfig)
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    study: StudyConfig = field(default_factory=StudyConfig)
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    @classmethod

    def default(cls) -> "XWEchoConfig":
        """Get default configuration instance."""
        return cls()
    @classmethod

    def from_dict(cls, config_dict: dict[str, Any]) -> "XWEchoConfig":
        """
        Create configuration from a nested dictionary.
        Hyperparameter sections are merged over their stage defaults so a
        file only needs to list the values it changes.
        Args:
            config_dict: Dictionary with one sub-dictionary per section
        Returns:
            XWEchoConfig instance
        """
        kwargs: dict[str, Any] = {}
        for name, section_cls in _SECTIONS.items():
            section = config_dict.get(name)
            if isinstance(section, dict):
                kwargs[name] = section_cls.from_dict(section)
        for name, factory in (
            ("tdoa", MttHyperparams.tdoa_default),
            ("tracking_3d", MttHyperparams.tracking3d_default),
        ):
            section = config_dict.get(name)
            if isinstance(section, dict):
                merged = factory().to_dict()
                merged.update(section)
                kwargs[name] = MttHyperparams.from_dict(merged)
        return cls(**kwargs)

    def to_dict(self) -> dict[str, Any]:
        """Convert configuration to a nested dictionary."""
        return {
            "signal": self.signal.to_dict(),
            "cluster": self.cluster.to_dict(),
            "tdoa": self.tdoa.to_dict(),
            "tracking_3d": self.tracking_3d.to_dict(),
            "tdoa_tracker": self.tdoa_tracker.to_dict(),
            "tracker3d": self.tracker3d.to_dict(),
            "scenario": self.scenario.to_dict(),
            "study": self.study.to_dict(),
            "pipeline": self.pipeline.to_dict(),
        }
# ==============================================================================
# FILE LOADING
# ==============================================================================


def load_native(path: str | Path, format_hint: str | None = None) -> Any:
    """
    Load a structured file (JSON, YAML, TOML, ...) into native Python data.
    Uses XWData.load() so every format xwdata supports is accepted.
    """
    from exonware.xwdata import XWData
    path = Path(path)
    if not path.exists():
        raise XWEchoConfigError(f"Configuration file not found: {path}", key=str(path))
    try:
        loop = asyncio.get_event_loop()
        if loop.is_running():
            with concurrent.futures.ThreadPoolExecutor() as executor:
                future = executor.submit(asyncio.run, XWData.load(path, format_hint=format_hint))
                loaded = future.result()
        else:
            loaded = loop.run_until_complete(XWData.load(path, format_hint=format_hint))
    except RuntimeError:
        loaded = asyncio.run(XWData.load(path, format_hint=format_hint))
    except Exception as e:
        raise XWEchoConfigError(f"Cannot read configuration file {path}", key=str(path), cause=e) from e
    return loaded.to_native() if isinstance(loaded, XWData) else loaded


def load_config(path: str | Path, validate: bool = True) -> XWEchoConfig:
    """
    Load and validate an XWEcho configuration file.
    Args:
        path: Configuration file path
        validate: Check the tree against the configuration schema first
    Returns:
        XWEchoConfig instance
    Raises:
        XWEchoConfigError: File missing, unreadable or not schema-conformant
    """
    native = load_native(path)
    if not isinstance(native, dict):
        raise XWEchoConfigError(f"Configuration root must be a mapping: {path}")
    if validate:
        from .schema import ConfigSchemaValidator
        ConfigSchemaValidator().check(native, source=str(path))
    config = XWEchoConfig.from_dict(native)
    logger.info(f"Loaded configuration from {path}")
    return config
# ==============================================================================
# GLOBAL CONFIGURATION
# ==============================================================================
_global_config: XWEchoConfig | None = None


def get_config() -> XWEchoConfig:
    """
    Get global xwecho configuration.
    Returns:
        Global XWEchoConfig instance
    """
    global _global_config
    if _global_config is None:
        _global_config = XWEchoConfig.default()
    return _global_config


def set_config(config: XWEchoConfig) -> None:
    """
    Set global xwecho configuration.
    Args:
        config: Configuration instance to set as global
    """
    global _global_config
    _global_config = config
    logger.debug("Global xwecho configuration updated")
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
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
]
