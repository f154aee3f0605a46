"""
#exonware/xwecho/src/exonware/xwecho/pipeline/__init__.py
Command implementations behind the xwecho CLI and their artifact helpers.
"""

from .io import (
    apply_hyperparameter_file,
    build_manifest,
    resolve_geometry,
    sha256_file,
    write_manifest,
)
from .commands import (
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
