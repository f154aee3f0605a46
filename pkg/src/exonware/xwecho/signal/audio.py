#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/signal/audio.py
Multichannel audio input and output.
PCM wave files in any encoding scipy reads, or raw float32 little-endian
samples with a JSON sidecar header {fs, channels, t0} at <file>.json.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from pathlib import Path
from typing import Sequence
import numpy as np
from scipy.io import wavfile
from exonware.xwsystem import get_logger
from ..errors import XWEchoSchemaError
from .spectral import SampledSignal
logger = get_logger(__name__)
RAW_SUFFIXES = (".f32", ".raw", ".bin")


def sidecar_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".json")


def _scale_pcm(data: np.ndarray) -> np.ndarray:
    if data.dtype == np.uint8:
        return (data.astype(float) - 128.0) / 128.0
    if np.issubdtype(data.dtype, np.integer):
        return data.astype(float) / float(2 ** (8 * data.dtype.itemsize - 1))
    return data.astype(float)


def read_audio(path: str | Path) -> list[SampledSignal]:
    """
    Read every channel of a recording.
    Integer PCM is scaled to [-1, 1).
    Raises:
        XWEchoSchemaError: File missing, unreadable, or sidecar header incomplete
    """
    path = Path(path)
    if not path.exists():
        raise XWEchoSchemaError("Audio file not found", path=str(path))
    if path.suffix.lower() in RAW_SUFFIXES:
        return _read_raw(path)
    try:
        fs, data = wavfile.read(path)
    except (ValueError, OSError) as e:
        raise XWEchoSchemaError("Cannot read wave file", path=str(path), cause=e) from e
    samples = _scale_pcm(np.asarray(data))
    if samples.ndim == 1:
        samples = samples[:, None]
    logger.debug(f"Read {samples.shape[1]} channels of {samples.shape[0]} samples from {path}")
    return [SampledSignal(samples[:, c], float(fs)) for c in range(samples.shape[1])]


def _read_raw(path: Path) -> list[SampledSignal]:
    from ..config import load_native
    header_path = sidecar_path(path)
    if not header_path.exists():
        raise XWEchoSchemaError("Raw audio needs a sidecar header", path=str(header_path))
    header = load_native(header_path, format_hint="json")
    for key in ("fs", "channels"):
        if key not in header:
            raise XWEchoSchemaError(f"Sidecar header lacks '{key}'", path=str(header_path), column=key)
    channels = int(header["channels"])
    data = np.fromfile(path, dtype="<f4")
    if data.size % channels:
        raise XWEchoSchemaError(
            f"{data.size} samples do not divide into {channels} channels", path=str(path)
        )
    data = data.reshape(-1, channels).astype(float)
    t0 = float(header.get("t0", 0.0))
    return [SampledSignal(data[:, c], float(header["fs"]), t0) for c in range(channels)]


def write_wave(path: str | Path, channels: Sequence[SampledSignal]) -> Path:
    """Write channels as a float32 wave file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = min(len(c) for c in channels)
    data = np.stack([c.samples[:n] for c in channels], axis=1).astype(np.float32)
    wavfile.write(path, int(round(channels[0].fs)), data)
    return path


def write_raw(path: str | Path, channels: Sequence[SampledSignal]) -> Path:
    """Write channels as interleaved float32 LE with a JSON sidecar header."""
    from exonware.xwsystem import JsonSerializer
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = min(len(c) for c in channels)
    data = np.stack([c.samples[:n] for c in channels], axis=1).astype("<f4")
    data.tofile(path)
    header = {"fs": float(channels[0].fs), "channels": len(channels), "t0": float(channels[0].t0)}
    JsonSerializer().save_file(header, sidecar_path(path), indent=2, ensure_ascii=False)
    return path
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "RAW_SUFFIXES",
    "read_audio",
    "write_wave",
    "write_raw",
    "sidecar_path",
]
