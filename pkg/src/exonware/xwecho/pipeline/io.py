#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/pipeline/io.py
Run manifests, input digests and resolution of geometry and
hyperparameter files for the pipeline commands.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import hashlib
from dataclasses import replace
from pathlib import Path
from typing import Any, Iterable
from exonware.xwsystem import get_logger
from ..config import MttHyperparams, XWEchoConfig, load_native
from ..errors import XWEchoConfigError
from ..tracking import ArrayGeometry, load_geometry
from ..version import __version__
logger = get_logger(__name__)


def sha256_file(path: str | Path, chunk: int = 1 << 20) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(chunk), b""):
            digest.update(block)
    return digest.hexdigest()


def build_manifest(
    command: str,
    inputs: Iterable[str | Path],
    config: XWEchoConfig,
    outputs: Iterable[str | Path] = (),
) -> dict[str, Any]:
    """
    Everything that determines a command's outputs: inputs with digests,
    parameters and seed. No timestamps, so reruns write identical manifests.
    """
    return {
        "command": command,
        "version": __version__,
        "seed": config.pipeline.seed,
        "inputs": [{"path": Path(p).name, "sha256": sha256_file(p)} for p in inputs],
        "parameters": config.to_dict(),
        "outputs": [Path(p).name for p in outputs],
    }


def write_manifest(path: str | Path, manifest: dict[str, Any]) -> Path:
    from exonware.xwsystem import JsonSerializer
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    JsonSerializer().save_file(manifest, path, indent=2, ensure_ascii=False)
    logger.info(f"Wrote manifest {path}")
    return path


def resolve_geometry(config: XWEchoConfig) -> ArrayGeometry:
    """Geometry file of the config, or the two-array default."""
    if config.pipeline.geometry_path:
        return load_geometry(config.pipeline.geometry_path)
    return ArrayGeometry.two_array_default()


def apply_hyperparameter_file(config: XWEchoConfig) -> XWEchoConfig:
    """
    Merge the tdoa / tracking_3d sections of the hyperparameter file over
    the current values.
    """
    path = config.pipeline.hyperparameter_path
    if not path:
        return config
    native = load_native(path)
    if not isinstance(native, dict):
        raise XWEchoConfigError(f"Hyperparameter file root must be a mapping: {path}", key=str(path))
    from ..schema import ConfigSchemaValidator, HYPERPARAMETER_SCHEMA
    validator = ConfigSchemaValidator(HYPERPARAMETER_SCHEMA)
    for name in ("tdoa", "tracking_3d"):
        section = native.get(name)
        if isinstance(section, dict):
            validator.check(section, source=f"{path}:{name}")
            merged = getattr(config, name).to_dict()
            merged.update(section)
            config = replace(config, **{name: MttHyperparams.from_dict(merged)})
    logger.info(f"Applied hyperparameters from {path}")
    return config
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "sha256_file",
    "build_manifest",
    "write_manifest",
    "resolve_geometry",
    "apply_hyperparameter_file",
]
