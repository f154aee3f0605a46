#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/signal/spectral.py
Cross power spectra, frequency weightings and the generalized cross-correlation.
Delay convention: for b[n] = a[n + d] the correlation peaks at lag +d, so a
positive delay means the second channel receives the click first.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterator, Sequence
import numpy as np
from scipy import signal as sps
from exonware.xwsystem import get_logger
from ..defs import FloatArray, IntArray, WeightingKind
from ..errors import XWEchoValidationError, XWEchoNumericalError
logger = get_logger(__name__)
# ==============================================================================
# DOMAIN TYPES
# ==============================================================================


@dataclass(frozen=True)
class SampledSignal:
    """One channel of real samples with its sampling rate and start time."""
    samples: FloatArray
    fs: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=float).ravel()
        if samples.size == 0:
            raise XWEchoValidationError("Signal has no samples", field="samples")
        if not self.fs > 0.0:
            raise XWEchoValidationError("Sampling rate must be positive", field="fs", value=self.fs)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return int(self.samples.size)

    @property
    def duration(self) -> float:
        return len(self) / self.fs

    def with_samples(self, samples: FloatArray) -> "SampledSignal":
        """Same timing, new samples."""
        return SampledSignal(samples, self.fs, self.t0)


@dataclass(frozen=True)
class CrossPsd:
    """Cross power spectrum R[l] = A[l] conj(B[l]) over nfft bins."""
    values: np.ndarray
    nfft: int
    fs: float

    def __post_init__(self) -> None:
        if len(self.values) != self.nfft:
            raise XWEchoValidationError(
                "Cross PSD length differs from nfft", field="values", value=len(self.values)
            )


@dataclass(frozen=True)
class Weighting:
    """Real non-negative frequency weighting psi[l]."""
    kind: WeightingKind
    values: FloatArray

    def __post_init__(self) -> None:
        if np.any(self.values < 0.0) or not np.all(np.isfinite(self.values)):
            raise XWEchoNumericalError("Weighting must be finite and non-negative", operation="make_weighting")


@dataclass(frozen=True)
class GccSequence:
    """Real GCC values ordered by lag in [-nfft/2, nfft/2)."""
    lags: IntArray
    values: FloatArray
    fs: float
    time: float = 0.0

    @property
    def delays(self) -> FloatArray:
        return self.lags / self.fs

    def value_at_lag(self, lag: int) -> float:
        return float(self.values[int(lag) - int(self.lags[0])])

    def argmax_lag(self) -> int:
        return int(self.lags[int(np.argmax(self.values))])


@dataclass
class GccFrames:
    """
    GCC sequences of consecutive frames of one sensor, stacked as
    (n_frames, nfft) with a shared lag axis.
    """
    times: FloatArray
    lags: IntArray
    values: FloatArray
    fs: float
    sensor: int = 0
    offsets: FloatArray = field(default_factory=lambda: np.zeros(0))

    def __len__(self) -> int:
        return int(len(self.times))

    def __iter__(self) -> Iterator[GccSequence]:
        for i in range(len(self)):
            yield GccSequence(self.lags, self.values[i], self.fs, float(self.times[i]))
    @classmethod

    def stack(cls, sequences: Sequence[GccSequence], sensor: int = 0) -> "GccFrames":
        """Stack individual sequences sharing one lag axis."""
        if not sequences:
            return cls(np.zeros(0), np.zeros(0, dtype=np.int64), np.zeros((0, 0)), 1.0, sensor)
        lags = sequences[0].lags
        for seq in sequences:
            if len(seq.lags) != len(lags) or seq.fs != sequences[0].fs:
                raise XWEchoValidationError("GCC sequences have different lag axes", field="gcc_frames")
        return cls(
            times=np.array([s.time for s in sequences], dtype=float),
            lags=np.asarray(lags),
            values=np.vstack([s.values for s in sequences]),
            fs=sequences[0].fs,
            sensor=sensor,
        )
# ==============================================================================
# HELPERS
# ==============================================================================


def taper(window: str | None, n: int) -> FloatArray:
    """Analysis window of length n; None or 'boxcar' gives ones."""
    if window is None or window in ("boxcar", "rect", "rectangular", "none"):
        return np.ones(n)
    return np.asarray(sps.get_window(window, n, fftbins=True), dtype=float)


def lag_axis(nfft: int) -> IntArray:
    """Lags matching np.fft.fftshift ordering: [-nfft//2, nfft - nfft//2)."""
    return np.arange(-(nfft // 2), nfft - nfft // 2, dtype=np.int64)


def to_two_sided(psd: FloatArray, nfft: int) -> FloatArray:
    """Expand a one-sided (rfft) PSD of nfft//2 + 1 bins to nfft bins."""
    psd = np.asarray(psd, dtype=float)
    if psd.shape[-1] == nfft:
        return psd
    if psd.shape[-1] != nfft // 2 + 1:
        raise XWEchoValidationError(
            f"PSD has {psd.shape[-1]} bins, expected {nfft} or {nfft // 2 + 1}", field="psd"
        )
    mirrored = psd[..., 1:(nfft + 1) // 2][..., ::-1]
    return np.concatenate([psd, mirrored], axis=-1)


def _frame_values(frame: SampledSignal | FloatArray) -> tuple[FloatArray, float | None]:
    if isinstance(frame, SampledSignal):
        return frame.samples, frame.fs
    return np.asarray(frame, dtype=float).ravel(), None
# ==============================================================================
# OPERATIONS
# ==============================================================================


def estimate_cross_psd(
    a: SampledSignal | FloatArray,
    b: SampledSignal | FloatArray,
    window: str | None = "hamming",
    fs: float | None = None,
) -> CrossPsd:
    """
    Cross power spectrum of two equal-length frames after tapering.
    Args:
        a: First frame
        b: Second frame
        window: Taper name, or None for a rectangular window
        fs: Sampling rate when plain arrays are passed
    Returns:
        CrossPsd with values[l] = DFT(w a)[l] conj(DFT(w b)[l])
    """
    xa, fs_a = _frame_values(a)
    xb, fs_b = _frame_values(b)
    if xa.size != xb.size:
        raise XWEchoValidationError(
            f"Frame lengths differ: {xa.size} vs {xb.size}", field="frame", value=(xa.size, xb.size)
        )
    if fs_a is not None and fs_b is not None and fs_a != fs_b:
        raise XWEchoValidationError("Frames have different sampling rates", field="fs", value=(fs_a, fs_b))
    rate = fs_a or fs_b or fs or 1.0
    w = taper(window, xa.size)
    spectrum = np.fft.fft(w * xa) * np.conj(np.fft.fft(w * xb))
    return CrossPsd(spectrum, int(xa.size), float(rate))


def _floored(denominator: FloatArray, floor: float | None, what: str) -> FloatArray:
    if floor:
        peak = float(np.max(denominator)) if denominator.size else 0.0
        if peak <= 0.0:
            raise XWEchoValidationError(f"{what} is zero in every bin", field=what)
        return np.maximum(denominator, floor * peak)
    if np.any(denominator <= 0.0):
        raise XWEchoValidationError(f"{what} has non-positive bins and no floor", field=what)
    return denominator


def make_weighting(
    kind: WeightingKind | str,
    auto_psd_a: FloatArray | None = None,
    auto_psd_b: FloatArray | None = None,
    cross_psd: CrossPsd | None = None,
    floor: float | None = 1e-12,
    nfft: int | None = None,
) -> Weighting:
    """
    Build a GCC frequency weighting.
    SCOT and WIN take auto PSDs (frame periodograms for SCOT, noise-template
    columns for WIN); one-sided PSDs are mirrored to nfft bins. PHAT takes the
    cross PSD. Denominators are clamped at floor * max, or rejected when
    floor is None and a bin is non-positive.
    """
    kind = WeightingKind(kind)
    if nfft is None:
        if cross_psd is not None:
            nfft = cross_psd.nfft
        elif auto_psd_a is not None:
            nfft = len(auto_psd_a)
        else:
            raise XWEchoValidationError("Cannot infer nfft for the weighting", field="nfft")
    if kind is WeightingKind.NONE:
        return Weighting(kind, np.ones(nfft))
    if kind is WeightingKind.PHAT:
        if cross_psd is None:
            raise XWEchoValidationError("PHAT needs the cross PSD", field="cross_psd")
        magnitude = _floored(np.abs(cross_psd.values), floor, "cross_psd")
        return Weighting(kind, 1.0 / magnitude)
    if auto_psd_a is None or auto_psd_b is None:
        raise XWEchoValidationError(f"{kind.value.upper()} needs both auto PSDs", field="auto_psd")
    g_aa = to_two_sided(auto_psd_a, nfft)
    g_bb = to_two_sided(auto_psd_b, nfft)
    if g_aa.shape != g_bb.shape:
        raise XWEchoValidationError("Auto PSD lengths differ", field="auto_psd_b")
    product = _floored(g_aa * g_bb, floor**2 if floor else floor, "auto_psd")
    return Weighting(kind, 1.0 / np.sqrt(product))


def gcc(cross_psd: CrossPsd, w: Weighting, time: float = 0.0) -> GccSequence:
    """
    Generalized cross-correlation r[m] = (1/N) sum_l psi[l] R[l] exp(j 2 pi m l / N).
    Returns the real part with lags in [-N/2, N/2).
    """
    if len(w.values) != cross_psd.nfft:
        raise XWEchoValidationError(
            f"Weighting has {len(w.values)} bins, cross PSD {cross_psd.nfft}", field="weighting"
        )
    r = np.fft.ifft(w.values * cross_psd.values).real
    return GccSequence(lag_axis(cross_psd.nfft), np.fft.fftshift(r), cross_psd.fs, time)


def gcc_frames(
    a: SampledSignal,
    b: SampledSignal,
    kind: WeightingKind | str = WeightingKind.PHAT,
    nfft: int = 512,
    hop: int = 256,
    window: str | None = "hamming",
    floor: float = 1e-12,
    template_a: FloatArray | None = None,
    template_b: FloatArray | None = None,
    columns_a: IntArray | None = None,
    columns_b: IntArray | None = None,
    max_lag: int | None = None,
    sensor: int = 0,
    chunk: int = 4096,
) -> GccFrames:
    """
    Frame-by-frame GCC of two aligned channels.
    For WIN, template_a / template_b are one-sided noise spectrograms of shape
    (nfft//2 + 1, n_template_frames) and columns_a / columns_b give the
    template column to use for every GCC frame.
    Only lags with |lag| <= max_lag + 1 are kept when max_lag is given.
    """
    kind = WeightingKind(kind)
    if a.fs != b.fs:
        raise XWEchoValidationError("Channels have different sampling rates", field="fs")
    n = min(len(a), len(b))
    if n < nfft:
        raise XWEchoValidationError(f"Signal shorter than one frame ({n} < {nfft})", field="samples")
    n_frames = 1 + (n - nfft) // hop
    w = taper(window, nfft)
    lags = lag_axis(nfft)
    keep = np.ones(nfft, dtype=bool) if max_lag is None else np.abs(lags) <= max_lag + 1
    frames_a = np.lib.stride_tricks.sliding_window_view(a.samples[:n], nfft)[::hop]
    frames_b = np.lib.stride_tricks.sliding_window_view(b.samples[:n], nfft)[::hop]
    out = np.empty((n_frames, int(keep.sum())))
    if kind is WeightingKind.WIN:
        if template_a is None or template_b is None or columns_a is None or columns_b is None:
            raise XWEchoValidationError("WIN weighting needs noise-template columns", field="template")
        if len(columns_a) < n_frames or len(columns_b) < n_frames:
            raise XWEchoValidationError("Template column index shorter than the frame count", field="columns")
    for start in range(0, n_frames, chunk):
        stop = min(start + chunk, n_frames)
        spec_a = np.fft.fft(frames_a[start:stop] * w, axis=1)
        spec_b = np.fft.fft(frames_b[start:stop] * w, axis=1)
        cross = spec_a * np.conj(spec_b)
        if kind is WeightingKind.NONE:
            weighted = cross
        elif kind is WeightingKind.PHAT:
            mag = np.abs(cross)
            weighted = cross / np.maximum(mag, floor * mag.max(axis=1, keepdims=True) + 1e-300)
        elif kind is WeightingKind.SCOT:
            prod = (np.abs(spec_a) ** 2) * (np.abs(spec_b) ** 2)
            weighted = cross / np.sqrt(np.maximum(prod, floor**2 * prod.max(axis=1, keepdims=True) + 1e-300))
        else:
            g_aa = to_two_sided(template_a[:, columns_a[start:stop]].T, nfft)
            g_bb = to_two_sided(template_b[:, columns_b[start:stop]].T, nfft)
            prod = g_aa * g_bb
            weighted = cross / np.sqrt(np.maximum(prod, floor**2 * prod.max(axis=1, keepdims=True) + 1e-300))
        r = np.fft.fftshift(np.fft.ifft(weighted, axis=1).real, axes=1)
        out[start:stop] = r[:, keep]
    times = a.t0 + (np.arange(n_frames) * hop + nfft / 2.0) / a.fs
    logger.debug(f"GCC-{kind.value} over {n_frames} frames for sensor {sensor}")
    return GccFrames(times, lags[keep], out, a.fs, sensor)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
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
]
