#!/usr/bin/env python3
"""
#exonware/xwecho/src/xwecho.py
XWEcho Re-export Module
This module re-exports the main xwecho entry points for short imports
(``import xwecho``).
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from exonware.xwecho import (
    __version__,
    ArrayGeometry,
    XWEchoConfig,
    extract_tdoas,
    run_study,
    track_3d,
    track_all_sensors,
)
from exonware.xwecho.cli import main
__all__ = [
    "__version__",
    "ArrayGeometry",
    "XWEchoConfig",
    "extract_tdoas",
    "run_study",
    "track_3d",
    "track_all_sensors",
    "main",
]
