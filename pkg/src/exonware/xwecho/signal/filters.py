#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/signal/filters.py
Zero-phase highpass prefilter and ADCP pulse removal.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from functools import lru_cache
import numpy as np
from scipy import signal as sps
from scipy.ndimage import median_filter
from exonware.xwsystem import get_logger
from ..defs import FloatArray
from ..errors import XWEchoValidationError
from .spectral import SampledSignal
logger = get_logger(__name__)
MIN_PREFILTER_RATE = 30_000.0
# ==============================================================================
# HIGHPASS
# ==============================================================================


@lru_cache(maxsize=16)
def design_highpass(
    fs: float,
    stop_hz: float = 13_000.0,
    pass_hz: float = 15_000.0,
    numtaps: int = 129,
) -> FloatArray:
    """Equiripple (Parks-McClellan) highpass taps; numtaps is forced odd."""
    if numtaps % 2 == 0:
        numtaps += 1
    if not 0.0 < stop_hz < pass_hz < fs / 2.0:
        raise XWEchoValidationError(
            f"Band edges {stop_hz}/{pass_hz} Hz invalid for fs={fs}", field="prefilter"
        )
    taps = sps.remez(numtaps, [0.0, stop_hz, pass_hz, fs / 2.0], [0.0, 1.0], weight=[10.0, 1.0], fs=fs)
    return np.asarray(taps, dtype=float)


def zero_phase_kernel(taps: FloatArray) -> FloatArray:
    """Impulse response of forward-backward filtering: h convolved with reversed h."""
    return np.convolve(taps, taps[::-1])


def prefilter_highpass(
    signal: SampledSignal,
    stop_hz: float = 13_000.0,
    pass_hz: float = 15_000.0,
    numtaps: int = 129,
) -> SampledSignal:
    """
    Apply the highpass forward and backward.
    The net filter is the symmetric kernel h * reversed(h), centred on each
    sample, so the output has zero phase and no group delay.
    """
    if signal.fs <= MIN_PREFILTER_RATE:
        raise XWEchoValidationError(
            f"Prefilter needs fs > {MIN_PREFILTER_RATE:.0f} Hz", field="fs", value=signal.fs
        )
    kernel = zero_phase_kernel(design_highpass(float(signal.fs), stop_hz, pass_hz, numtaps))
    filtered = sps.oaconvolve(signal.samples, kernel, mode="same")
    return signal.with_samples(filtered)
# ==============================================================================
# ADCP REMOVAL
# ==============================================================================


def remove_adcp(
    signal: SampledSignal,
    center_hz: float = 25_000.0,
    half_band_hz: float = 2_000.0,
    threshold: float = 6.0,
    band_fraction: float = 0.5,
    block: float = 1e-3,
    median_window: float = 1.0,
    min_duration: float = 3e-3,
    pad: float = 5e-3,
) -> SampledSignal:
    """
    Null narrowband current-profiler pings.
    Band energy around center_hz is measured in short blocks. A block is
    flagged when its band energy exceeds threshold times the running median
    and holds at least band_fraction of the block's total energy. Runs of
    flagged blocks lasting min_duration or longer are zeroed, padded by pad
    on each side.
    """
    x = signal.samples
    fs = signal.fs
    low, high = center_hz - half_band_hz, center_hz + half_band_hz
    if high >= fs / 2.0:
        logger.warning(f"ADCP band {low:.0f}-{high:.0f} Hz above Nyquist; removal skipped")
        return signal.with_samples(x.copy())
    sos = sps.butter(6, [low, high], btype="bandpass", fs=fs, output="sos")
    band = sps.sosfiltfilt(sos, x)
    block_len = max(1, int(round(block * fs)))
    n_blocks = int(np.ceil(x.size / block_len))
    padded = n_blocks * block_len - x.size
    band_energy = np.pad(band**2, (0, padded)).reshape(n_blocks, block_len).sum(axis=1)
    total_energy = np.pad(x**2, (0, padded)).reshape(n_blocks, block_len).sum(axis=1)
    width = max(1, int(round(median_window / block)))
    width += 1 - width % 2
    running = median_filter(band_energy, size=width, mode="nearest")
    flagged = (
        (band_energy > threshold * running)
        & (band_energy >= band_fraction * total_energy)
        & (band_energy > 0.0)
    )
    min_blocks = max(1, int(np.ceil(min_duration / block - 1e-9)))
    pad_len = int(round(pad * fs))
    cleaned = x.copy()
    nulled = 0
    for start, stop in _runs(flagged):
        if stop - start < min_blocks:
            continue
        lo = max(0, start * block_len - pad_len)
        hi = min(x.size, stop * block_len + pad_len)
        cleaned[lo:hi] = 0.0
        nulled += 1
    if nulled:
        logger.debug(f"Nulled {nulled} ADCP pulses")
    return signal.with_samples(cleaned)


def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Half-open index ranges of consecutive True values."""
    edges = np.diff(np.concatenate([[0], mask.astype(np.int8), [0]]))
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1)
    return list(zip(starts.tolist(), stops.tolist()))
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "MIN_PREFILTER_RATE",
    "design_highpass",
    "zero_phase_kernel",
    "prefilter_highpass",
    "remove_adcp",
]
