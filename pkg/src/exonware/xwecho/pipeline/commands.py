#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/pipeline/commands.py
Pipeline commands: TDOA extraction from audio, noise-template estimation,
per-sensor TDOA tracking, 3-D tracking and the Monte-Carlo study. Each
command writes its tables and a JSON manifest to the output directory.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Sequence
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from ..config import ClusterConfig, SignalConfig, XWEchoConfig
from ..defs import HYDROPHONES_PER_ARRAY, IntArray, MeasurementStream, WeightingKind
from ..errors import XWEchoConfigError, XWEchoGeometryError
from ..measurements import (
    TdoaMeasurementSet,
    build_measurement_sets,
    read_measurements,
    reverse_measurement_stream,
    stream_from_sets,
    write_measurements,
)
from ..mtt import Track, TrackerResult
from ..signal import (
    NoiseTemplate,
    NoiseTemplateBank,
    SampledSignal,
    TdoaPeak,
    align_noise_template,
    estimate_noise_template,
    extract_tdoa_peaks,
    gcc_frames,
    peaks_to_frame,
    prefilter_highpass,
    read_audio,
    remove_adcp,
    spectrogram,
    suppress_transients,
)
from ..signal.filters import MIN_PREFILTER_RATE
from ..sim import StudyResult, run_study
from ..tables import write_table
from ..tracking import (
    ArrayGeometry,
    collect_tracks,
    track_3d,
    track_all_sensors,
    tracks_to_measurement_sets,
    trajectory_frame,
    write_tdoa_tracks,
    write_tracks3d,
)
from .io import apply_hyperparameter_file, build_manifest, resolve_geometry, write_manifest
logger = get_logger(__name__)
# ==============================================================================
# EXTRACTION
# ==============================================================================


@dataclass
class ExtractionResult:
    peaks: list[TdoaPeak]
    sets: list[TdoaMeasurementSet]
    outputs: list[Path] = field(default_factory=list)


def condition_channel(signal: SampledSignal, cfg: SignalConfig) -> SampledSignal:
    """Highpass (when fs allows it) and ADCP removal."""
    if signal.fs > MIN_PREFILTER_RATE:
        signal = prefilter_highpass(signal, cfg.prefilter_stop_hz, cfg.prefilter_pass_hz, cfg.prefilter_numtaps)
    return remove_adcp(
        signal,
        cfg.adcp_center_hz,
        cfg.adcp_half_band_hz,
        cfg.adcp_threshold,
        cfg.adcp_band_fraction,
        cfg.adcp_block,
        cfg.adcp_median_window,
        cfg.adcp_min_duration,
        cfg.adcp_pad,
    )


def template_columns(channel: SampledSignal, template: NoiseTemplate, cfg: SignalConfig, n_frames: int) -> IntArray:
    """Template column of every GCC frame after aligning the template to the channel."""
    observed = spectrogram(suppress_transients(channel, cfg.transient_window).samples, cfg.nfft, cfg.overlap, cfg.window)
    offset = align_noise_template(template, observed)
    starts = np.arange(n_frames) * cfg.hop / channel.fs
    return template.columns_for(starts, offset)


def extract_tdoas(
    channels: Sequence[SampledSignal],
    pairs: Sequence[tuple[int, int, int]],
    max_delays: Mapping[int, float],
    signal_cfg: SignalConfig | None = None,
    cluster_cfg: ClusterConfig | None = None,
    templates: NoiseTemplateBank | None = None,
    condition: bool = True,
) -> ExtractionResult:
    """
    Peaks and measurement sets for the (sensor, channel_i, channel_j) pairs.
    A positive delay means channel j received the click first.
    """
    signal_cfg = signal_cfg or SignalConfig()
    cluster_cfg = cluster_cfg or ClusterConfig()
    if signal_cfg.weighting is WeightingKind.WIN and templates is None:
        raise XWEchoConfigError("WIN weighting requires a noise template", key="signal.noise_template_path")
    prepared = [condition_channel(c, signal_cfg) if condition else c for c in channels]
    fs = prepared[0].fs
    n = min(len(c) for c in prepared)
    n_frames = 1 + (n - signal_cfg.nfft) // signal_cfg.hop if n >= signal_cfg.nfft else 0
    columns: dict[int, IntArray] = {}
    peaks: list[TdoaPeak] = []
    for sensor, i, j in pairs:
        extra: dict = {}
        if signal_cfg.weighting is WeightingKind.WIN:
            for c in (i, j):
                if c not in columns:
                    columns[c] = template_columns(prepared[c], templates[c], signal_cfg, n_frames)
            extra = {
                "template_a": templates[i].spectrogram,
                "template_b": templates[j].spectrogram,
                "columns_a": columns[i],
                "columns_b": columns[j],
            }
        max_delay = max_delays[sensor]
        frames = gcc_frames(
            prepared[i],
            prepared[j],
            signal_cfg.weighting,
            signal_cfg.nfft,
            signal_cfg.hop,
            signal_cfg.window,
            signal_cfg.psd_floor,
            max_lag=int(np.ceil(max_delay * fs)),
            sensor=sensor,
            **extra,
        )
        peaks.extend(
            extract_tdoa_peaks(
                frames,
                signal_cfg.p_tdoa,
                sensor,
                signal_cfg.strong_peak_level,
                signal_cfg.echo_window,
                max_delay,
                signal_cfg.subsample_interpolation,
            )
        )
    sets = build_measurement_sets(peaks, cluster_cfg.step_length, cluster_cfg.cluster_samples, fs)
    logger.info(f"Extracted {len(peaks)} peaks into {sum(len(s) for s in sets)} measurements")
    return ExtractionResult(sorted(peaks), sets)


def geometry_pairs(geometry: ArrayGeometry) -> list[tuple[int, int, int]]:
    """(sensor, channel_i, channel_j) with channels numbered array by array."""
    return [
        (s.index, s.array * HYDROPHONES_PER_ARRAY + s.pair[0], s.array * HYDROPHONES_PER_ARRAY + s.pair[1])
        for s in geometry.sensors
    ]


def _read_channels(audio: Sequence[str | Path]) -> list[SampledSignal]:
    channels: list[SampledSignal] = []
    for path in audio:
        channels.extend(read_audio(path))
    return channels


def _templates(cfg: SignalConfig) -> NoiseTemplateBank | None:
    if cfg.weighting is not WeightingKind.WIN:
        return None
    if not cfg.noise_template_path:
        raise XWEchoConfigError("WIN weighting requires a noise template", key="signal.noise_template_path")
    return NoiseTemplateBank.load(cfg.noise_template_path)


def _out_dir(config: XWEchoConfig, out_dir: str | Path | None) -> Path:
    out = Path(out_dir or config.pipeline.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_extract(
    audio: Sequence[str | Path],
    config: XWEchoConfig | None = None,
    out_dir: str | Path | None = None,
    geometry: ArrayGeometry | None = None,
) -> ExtractionResult:
    """Audio files (channels concatenated in order) to peaks.csv and measurements.csv."""
    config = config or XWEchoConfig()
    geometry = geometry or resolve_geometry(config)
    channels = _read_channels(audio)
    expected = HYDROPHONES_PER_ARRAY * len(geometry.arrays)
    if len(channels) != expected:
        raise XWEchoConfigError(
            f"Expected {HYDROPHONES_PER_ARRAY} channels per array ({expected} total), got {len(channels)}",
            key="audio",
        )
    templates = _templates(config.signal)
    if templates is not None and len(templates) != expected:
        raise XWEchoConfigError(f"Noise template bank has {len(templates)} channels, need {expected}", key="signal.noise_template_path")
    result = extract_tdoas(
        channels,
        geometry_pairs(geometry),
        {s.index: s.max_delay for s in geometry.sensors},
        config.signal,
        config.cluster,
        templates,
    )
    out = _out_dir(config, out_dir)
    peaks_path = write_table(peaks_to_frame(result.peaks), out / "peaks.csv")
    sets_path = write_measurements(out / "measurements.csv", result.sets)
    inputs = list(audio) + ([config.signal.noise_template_path] if templates is not None else [])
    manifest = write_manifest(
        out / "manifest_extract.json", build_manifest("extract", inputs, config, [peaks_path, sets_path])
    )
    result.outputs = [peaks_path, sets_path, manifest]
    return result


def cmd_template(
    audio: Sequence[str | Path],
    config: XWEchoConfig | None = None,
    out_path: str | Path | None = None,
) -> NoiseTemplateBank:
    """Noise-only recordings to a per-channel template bank (.npz)."""
    config = config or XWEchoConfig()
    cfg = config.signal
    templates = [
        estimate_noise_template(condition_channel(c, cfg), cfg.template_period, cfg.nfft, cfg.overlap, cfg.window)
        for c in _read_channels(audio)
    ]
    bank = NoiseTemplateBank(templates)
    path = Path(out_path) if out_path else _out_dir(config, None) / "noise_templates.npz"
    bank.save(path)
    write_manifest(path.with_suffix(".json"), build_manifest("template", audio, config, [path]))
    return bank
# ==============================================================================
# TRACKING
# ==============================================================================


def _check_sensors(stream: MeasurementStream, geometry: ArrayGeometry) -> None:
    for by_sensor in stream.values():
        for s in by_sensor:
            if not 0 <= s < geometry.n_sensors:
                raise XWEchoGeometryError("Measurement file references a sensor missing from the geometry", sensor=s)


def _time_order(stream: MeasurementStream, reverse: bool) -> tuple[MeasurementStream, int]:
    """Stream in processing order and the step sum used to map reversed steps back."""
    if not reverse or not stream:
        return stream, 0
    return reverse_measurement_stream(stream), min(stream) + max(stream)


def _restore_steps(tracks: list[Track], step_sum: int) -> list[Track]:
    """Map reversed-time tracks back to original step order; rates change sign."""
    restored = []
    for t in tracks:
        states = t.states[::-1].copy()
        states[:, states.shape[1] // 2:] *= -1.0
        restored.append(Track(t.label, (step_sum - t.steps)[::-1], states, t.existences[::-1], t.sensor))
    return restored


def cmd_track_tdoa(
    measurements: str | Path,
    config: XWEchoConfig | None = None,
    out_dir: str | Path | None = None,
    geometry: ArrayGeometry | None = None,
) -> dict[int, TrackerResult]:
    """Per-sensor TDOA tracking; writes tdoa_tracks.csv and tdoa_estimates.csv."""
    config = apply_hyperparameter_file(config or XWEchoConfig())
    geometry = geometry or resolve_geometry(config)
    step_length = config.cluster.step_length
    stream = stream_from_sets(read_measurements(measurements, step_length))
    _check_sensors(stream, geometry)
    ordered, step_sum = _time_order(stream, config.pipeline.reverse_time)
    results = track_all_sensors(
        ordered, geometry, config.tdoa, config.tdoa_tracker, step_length, config.pipeline.rng_seed
    )
    if config.pipeline.reverse_time:
        for result in results.values():
            result.tracks = _restore_steps(result.tracks, step_sum)
    tracks = collect_tracks(results)
    out = _out_dir(config, out_dir)
    written = [
        write_tdoa_tracks(out / "tdoa_tracks.csv", tracks),
        write_measurements(out / "tdoa_estimates.csv", tracks_to_measurement_sets(tracks, step_length)),
        write_table(
            pd.concat([r.diagnostics_frame() for r in results.values()], ignore_index=True),
            out / "tdoa_diagnostics.csv",
        ),
    ]
    write_manifest(out / "manifest_track_tdoa.json", build_manifest("track-tdoa", [measurements], config, written))
    logger.info(f"TDOA stage: {len(tracks)} tracks over {len(results)} sensors")
    return results


def cmd_track_3d(
    estimates: str | Path,
    config: XWEchoConfig | None = None,
    out_dir: str | Path | None = None,
    geometry: ArrayGeometry | None = None,
) -> TrackerResult:
    """3-D tracking of TDOA estimates; writes tracks3d.csv, trajectory.csv and diagnostics."""
    config = apply_hyperparameter_file(config or XWEchoConfig())
    geometry = geometry or resolve_geometry(config)
    step_length = config.cluster.step_length
    stream = stream_from_sets(read_measurements(estimates, step_length))
    _check_sensors(stream, geometry)
    ordered, step_sum = _time_order(stream, config.pipeline.reverse_time)
    rng = np.random.default_rng(config.pipeline.rng_seed)
    result = track_3d(ordered, geometry, config.tracking_3d, config.tracker3d, step_length, rng)
    if config.pipeline.reverse_time:
        result.tracks = _restore_steps(result.tracks, step_sum)
    out = _out_dir(config, out_dir)
    written = [
        write_tracks3d(out / "tracks3d.csv", result.tracks),
        write_table(trajectory_frame(result.tracks, step_length), out / "trajectory.csv"),
        write_table(result.diagnostics_frame(), out / "diagnostics3d.csv"),
    ]
    write_manifest(out / "manifest_track_3d.json", build_manifest("track-3d", [estimates], config, written))
    logger.info(f"3-D stage: {len(result.tracks)} tracks")
    return result


def cmd_track(
    measurements: str | Path,
    config: XWEchoConfig | None = None,
    out_dir: str | Path | None = None,
    geometry: ArrayGeometry | None = None,
) -> TrackerResult:
    """Both tracking stages; the TDOA estimates feed the 3-D stage."""
    config = config or XWEchoConfig()
    out = _out_dir(config, out_dir)
    cmd_track_tdoa(measurements, config, out, geometry)
    return cmd_track_3d(out / "tdoa_estimates.csv", config, out, geometry)


def cmd_pipeline(
    audio: Sequence[str | Path],
    config: XWEchoConfig | None = None,
    out_dir: str | Path | None = None,
    geometry: ArrayGeometry | None = None,
) -> TrackerResult:
    """Extraction followed by both tracking stages."""
    config = config or XWEchoConfig()
    out = _out_dir(config, out_dir)
    cmd_extract(audio, config, out, geometry)
    return cmd_track(out / "measurements.csv", config, out, geometry)
# ==============================================================================
# SIMULATION
# ==============================================================================


def cmd_simulate(config: XWEchoConfig | None = None, out_dir: str | Path | None = None) -> StudyResult:
    """
    Monte-Carlo study; writes the RMSE, per-step error and cardinality tables.
    The tracking_3d section of a hyperparameter file is merged over the
    scenario hyperparameters, which drive both synthesis and tracking.
    An explicit pipeline seed replaces the study's base seed.
    """
    config = config or XWEchoConfig()
    if config.pipeline.hyperparameter_path:
        merged = apply_hyperparameter_file(replace(config, tracking_3d=config.scenario.hp))
        config = replace(config, scenario=replace(config.scenario, hp=merged.tracking_3d))
    if config.pipeline.seed is not None:
        config = replace(config, study=replace(config.study, base_seed=config.pipeline.seed))
    out = _out_dir(config, out_dir)
    tracker3d = replace(config.tracker3d, apply_speed_pruning=False)
    result = run_study(config.study, config.scenario, tracker3d, resolve_geometry(config))
    written = result.write(out)
    inputs = [config.pipeline.hyperparameter_path] if config.pipeline.hyperparameter_path else []
    write_manifest(out / "manifest_simulate.json", build_manifest("simulate", inputs, config, written))
    return result
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "ExtractionResult",
    "condition_channel",
    "template_columns",
    "extract_tdoas",
    "geometry_pairs",
    "cmd_extract",
    "cmd_template",
    "cmd_track_tdoa",
    "cmd_track_3d",
    "cmd_track",
    "cmd_pipeline",
    "cmd_simulate",
]
