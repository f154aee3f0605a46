#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/signal/noise.py
Instrument self-noise templates.
The recorder's own noise repeats with a fixed period. A template is the
average spectrogram over whole periods; at run time it is aligned to the
observed spectrogram and its columns whiten the GCC (WIN weighting).
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass
from pathlib import Path
import numpy as np
from scipy.ndimage import uniform_filter1d
from exonware.xwsystem import get_logger
from ..defs import FloatArray, IntArray
from ..errors import XWEchoValidationError, XWEchoNumericalError
from .spectral import SampledSignal, taper
logger = get_logger(__name__)
# ==============================================================================
# SPECTROGRAM
# ==============================================================================


def frame_count(n_samples: int, nfft: int, hop: int) -> int:
    """Number of full frames of length nfft advanced by hop."""
    if n_samples < nfft:
        return 0
    return 1 + (n_samples - nfft) // hop


def spectrogram(
    samples: FloatArray,
    nfft: int = 512,
    overlap: float = 0.5,
    window: str | None = "hamming",
    chunk: int = 8192,
) -> FloatArray:
    """
    Power spectrogram |rfft(w * frame)|^2 with shape (nfft//2 + 1, n_frames).
    Values are in the same units as the frame periodograms used by GCC so a
    template column can whiten a cross PSD directly.
    """
    x = np.asarray(samples, dtype=float)
    hop = max(1, int(round(nfft * (1.0 - overlap))))
    n_frames = frame_count(x.size, nfft, hop)
    if n_frames == 0:
        raise XWEchoValidationError(f"Signal shorter than one frame ({x.size} < {nfft})", field="samples")
    w = taper(window, nfft)
    frames = np.lib.stride_tricks.sliding_window_view(x, nfft)[::hop]
    out = np.empty((nfft // 2 + 1, n_frames))
    for start in range(0, n_frames, chunk):
        stop = min(start + chunk, n_frames)
        out[:, start:stop] = (np.abs(np.fft.rfft(frames[start:stop] * w, axis=1)) ** 2).T
    return out


def suppress_transients(signal: SampledSignal, window: float = 1e-3) -> SampledSignal:
    """
    Replace click-like transients by the mean amplitude.
    Samples whose moving-average amplitude exceeds its mean by more than two
    standard deviations keep their sign and get the mean absolute amplitude.
    """
    x = signal.samples
    size = max(1, int(round(window * signal.fs)))
    magnitude = np.abs(x)
    envelope = uniform_filter1d(magnitude, size=size, mode="nearest")
    spread = float(envelope.std())
    if spread == 0.0:
        return signal.with_samples(x.copy())
    mask = envelope - envelope.mean() > 2.0 * spread
    cleaned = x.copy()
    cleaned[mask] = np.sign(x[mask]) * magnitude.mean()
    logger.debug(f"Suppressed {int(mask.sum())} transient samples")
    return signal.with_samples(cleaned)
# ==============================================================================
# TEMPLATE
# ==============================================================================


@dataclass
class NoiseTemplate:
    """Average noise spectrogram over one period of one hydrophone channel."""
    spectrogram: FloatArray
    period: float
    nfft: int
    overlap: float
    window: str
    fs: float

    def __post_init__(self) -> None:
        self.spectrogram = np.asarray(self.spectrogram, dtype=float)
        if self.period <= 0.0:
            raise XWEchoValidationError("Template period must be positive", field="period", value=self.period)
        if np.any(self.spectrogram < 0.0):
            raise XWEchoValidationError("Template power must be non-negative", field="spectrogram")

    @property
    def n_frames(self) -> int:
        return int(self.spectrogram.shape[1])

    @property
    def hop(self) -> int:
        return max(1, int(round(self.nfft * (1.0 - self.overlap))))

    @property
    def period_frames(self) -> float:
        """Noise period in hops; snapped to an integer when within 1e-6 of one."""
        frames = self.period * self.fs / self.hop
        nearest = round(frames)
        return float(nearest) if abs(frames - nearest) < 1e-6 else frames

    def columns_for(self, frame_starts: FloatArray, offset: int = 0) -> IntArray:
        """
        Template column for frames starting at the given times (s), after
        shifting by an alignment offset in frames.
        """
        units = np.asarray(frame_starts, dtype=float) * self.fs / self.hop + offset
        return _phase_index(units, self.period_frames, self.n_frames)


def _phase_index(units: FloatArray, period_frames: float, n_columns: int) -> IntArray:
    """Column of the period reached after the given number of hops."""
    phase = np.mod(np.asarray(units, dtype=float) + 1e-6, period_frames)
    return np.minimum(phase.astype(np.int64), n_columns - 1)


def estimate_noise_template(
    signal: SampledSignal,
    period: float,
    nfft: int = 512,
    overlap: float = 0.5,
    window: str = "hamming",
) -> NoiseTemplate:
    """
    Average the spectrograms of consecutive whole-period segments.
    Args:
        signal: Noise recording of one channel (at least two periods)
        period: Noise period, seconds
        nfft: Frame length, samples
        overlap: Fractional frame overlap
        window: Taper name
    Returns:
        NoiseTemplate with 1 + (period_samples - nfft) // hop frames
    """
    seg_len = int(round(period * signal.fs))
    n_segments = len(signal) // seg_len if seg_len > 0 else 0
    if n_segments < 1:
        raise XWEchoValidationError(
            f"Signal of {signal.duration:.3f} s is shorter than one period ({period} s)",
            field="signal",
            value=signal.duration,
        )
    if n_segments < 2:
        logger.warning(f"Noise template estimated from a single period of {period} s")
    total: FloatArray | None = None
    for i in range(n_segments):
        segment = signal.samples[i * seg_len:(i + 1) * seg_len]
        spec = spectrogram(segment, nfft, overlap, window)
        total = spec if total is None else total + spec
    assert total is not None
    logger.info(f"Noise template from {n_segments} periods, {total.shape[1]} frames")
    return NoiseTemplate(total / n_segments, period, nfft, overlap, window, signal.fs)


def align_noise_template(template: NoiseTemplate | FloatArray, observed: FloatArray) -> int:
    """
    Frame offset aligning a template to an observed spectrogram.
    Observed columns are folded onto the noise period by their start time,
    the same phase rule NoiseTemplate.columns_for uses, and the folded
    column at phase p is matched to template column (p + offset) mod P.
    Both spectrograms are demeaned per frequency bin and normalized per
    column, so the score of an offset is the summed zero-lag SCOT coherence
    of matched columns. A plain array template has a period of exactly its
    column count.
    Raises:
        XWEchoValidationError: observed shorter than one template period
        XWEchoNumericalError: observed spectrogram is flat
    """
    t_spec = template.spectrogram if isinstance(template, NoiseTemplate) else np.asarray(template, dtype=float)
    obs = np.asarray(observed, dtype=float)
    n_bins, t_cols = t_spec.shape
    if obs.shape[0] != n_bins:
        raise XWEchoValidationError(
            f"Observed spectrogram has {obs.shape[0]} bins, template {n_bins}", field="observed"
        )
    if obs.shape[1] < t_cols:
        raise XWEchoValidationError(
            f"Observed spectrogram covers {obs.shape[1]} frames, template period is {t_cols}",
            field="observed",
        )
    t_hat = _normalized_columns(t_spec)
    o_hat = _normalized_columns(obs)
    if not np.any(o_hat):
        raise XWEchoNumericalError("Observed spectrogram has zero variance", operation="align_noise_template")
    if not np.any(t_hat):
        raise XWEchoNumericalError("Template spectrogram has zero variance", operation="align_noise_template")
    if isinstance(template, NoiseTemplate):
        n_phase = max(t_cols, int(np.ceil(template.period_frames - 1e-9)))
        phase = _phase_index(np.arange(obs.shape[1]), template.period_frames, n_phase)
    else:
        n_phase = t_cols
        phase = np.arange(obs.shape[1]) % n_phase
    folded = np.zeros((n_bins, n_phase))
    np.add.at(folded.T, phase, o_hat.T)
    padded = np.zeros((n_bins, n_phase))
    padded[:, :t_cols] = t_hat
    spectrum = np.fft.rfft(padded, axis=1) * np.conj(np.fft.rfft(folded, axis=1))
    score = np.fft.irfft(spectrum.sum(axis=0), n=n_phase)
    offset = int(np.argmax(score))
    logger.debug(f"Template aligned at offset {offset} of {n_phase} frames")
    return offset


def _normalized_columns(spec: FloatArray) -> FloatArray:
    centered = spec - spec.mean(axis=1, keepdims=True)
    norms = np.linalg.norm(centered, axis=0, keepdims=True)
    tiny = 1e-12 * float(norms.max()) if norms.size and norms.max() > 0 else 0.0
    return np.where(norms > tiny, centered / np.where(norms > tiny, norms, 1.0), 0.0)
# ==============================================================================
# TEMPLATE BANK
# ==============================================================================


@dataclass
class NoiseTemplateBank:
    """One template per hydrophone channel, stored as a single .npz file."""
    templates: list[NoiseTemplate]

    def __len__(self) -> int:
        return len(self.templates)

    def __getitem__(self, channel: int) -> NoiseTemplate:
        return self.templates[channel]

    def save(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        first = self.templates[0]
        np.savez_compressed(
            path,
            spectrograms=np.stack([t.spectrogram for t in self.templates]),
            period=first.period,
            nfft=first.nfft,
            overlap=first.overlap,
            window=np.array(first.window),
            fs=first.fs,
        )
        logger.info(f"Saved {len(self.templates)} noise templates to {path}")
        return path
    @classmethod

    def load(cls, path: str | Path) -> "NoiseTemplateBank":
        path = Path(path)
        if not path.exists():
            raise XWEchoValidationError(f"Noise template file not found: {path}", field="noise_template_path")
        with np.load(path, allow_pickle=False) as data:
            specs = data["spectrograms"]
            period = float(data["period"])
            nfft = int(data["nfft"])
            overlap = float(data["overlap"])
            window = str(data["window"])
            fs = float(data["fs"])
        return cls([NoiseTemplate(s, period, nfft, overlap, window, fs) for s in specs])
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "frame_count",
    "spectrogram",
    "suppress_transients",
    "NoiseTemplate",
    "NoiseTemplateBank",
    "estimate_noise_template",
    "align_noise_template",
]
