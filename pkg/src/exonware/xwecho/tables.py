#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/tables.py
CSV tables with fixed column schemas.
All artifact tables (peaks, measurements, tracks, study results) are
written and read through these helpers so float formatting and schema
errors are uniform.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from pathlib import Path
from typing import Mapping
import numpy as np
import pandas as pd
from exonware.xwsystem import get_logger
from .defs import CSV_FLOAT_FORMAT
from .errors import XWEchoSchemaError
logger = get_logger(__name__)
# ==============================================================================
# COLUMN SCHEMAS
# ==============================================================================
PEAK_COLUMNS: dict[str, type] = {"sensor": int, "time_s": float, "delay_s": float, "amplitude": float}
MEASUREMENT_COLUMNS: dict[str, type] = {"step": int, "sensor": int, "delay_s": float, "amplitude": float}
TDOA_TRACK_COLUMNS: dict[str, type] = {
    "sensor": int,
    "label": str,
    "step": int,
    "delay_s": float,
    "delay_rate": float,
    "existence": float,
}
TRACK3D_COLUMNS: dict[str, type] = {
    "label": str,
    "step": int,
    "x": float,
    "y": float,
    "z": float,
    "vx": float,
    "vy": float,
    "vz": float,
    "existence": float,
}
TRAJECTORY_COLUMNS: dict[str, type] = {
    "label": str,
    "step": int,
    "time_s": float,
    "coordinate": str,
    "value": float,
}
TDOA_PROJECTION_COLUMNS: dict[str, type] = {"label": str, "step": int, "sensor": int, "delay_s": float}
# ==============================================================================
# WRITE / READ
# ==============================================================================


def write_table(frame: pd.DataFrame, path: str | Path) -> Path:
    """Write a table as CSV with byte-stable float formatting."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.debug(f"Wrote {len(frame)} rows to {path}")
    return path


def empty_table(columns: Mapping[str, type]) -> pd.DataFrame:
    """Empty frame with the schema's columns and dtypes."""
    return pd.DataFrame({name: pd.Series(dtype=_pandas_dtype(kind)) for name, kind in columns.items()})


def read_table(path: str | Path, columns: Mapping[str, type]) -> pd.DataFrame:
    """
    Read a CSV and check it against a column schema.
    Extra columns are kept. Line numbers in errors are 1-based with the
    header on line 1.
    Raises:
        XWEchoSchemaError: Missing file, missing column or unparsable value
    """
    path = Path(path)
    if not path.exists():
        raise XWEchoSchemaError("Input table not found", path=str(path))
    try:
        raw = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise XWEchoSchemaError("Input table has no header", path=str(path), line=1, cause=e) from e
    except pd.errors.ParserError as e:
        raise XWEchoSchemaError("Input table is not valid CSV", path=str(path), cause=e) from e
    raw.columns = [c.strip() for c in raw.columns]
    for name in columns:
        if name not in raw.columns:
            raise XWEchoSchemaError(f"Missing column '{name}'", path=str(path), line=1, column=name)
    result = pd.DataFrame(index=raw.index)
    for name, kind in columns.items():
        text = raw[name].str.strip()
        if kind is str:
            result[name] = text
            continue
        values = pd.to_numeric(text, errors="coerce")
        bad = values.isna().to_numpy()
        if kind is int and not bad.all():
            finite = values.to_numpy(dtype=float)
            bad |= ~np.isnan(finite) & (np.floor(finite) != finite)
        if bad.any():
            row = int(np.flatnonzero(bad)[0])
            raise XWEchoSchemaError(
                f"Unparsable value {raw[name].iloc[row]!r} in column '{name}'",
                path=str(path),
                line=row + 2,
                column=name,
            )
        result[name] = values.astype(_pandas_dtype(kind))
    for name in raw.columns:
        if name not in columns:
            result[name] = raw[name]
    return result


def _pandas_dtype(kind: type) -> str:
    if kind is int:
        return "int64"
    if kind is float:
        return "float64"
    return "object"
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "PEAK_COLUMNS",
    "MEASUREMENT_COLUMNS",
    "TDOA_TRACK_COLUMNS",
    "TRACK3D_COLUMNS",
    "TRAJECTORY_COLUMNS",
    "TDOA_PROJECTION_COLUMNS",
    "write_table",
    "empty_table",
    "read_table",
]
