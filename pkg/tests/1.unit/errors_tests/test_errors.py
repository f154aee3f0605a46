#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/errors_tests/test_errors.py
Unit tests for XWEcho error classes.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import pytest
from exonware.xwecho import (
    ExitCode,
    XWEchoConfigError,
    XWEchoError,
    XWEchoGeometryError,
    XWEchoNumericalError,
    XWEchoSchemaError,
    XWEchoValidationError,
)
@pytest.mark.xwecho_unit

class TestErrors:
    """Test error classes."""

    def test_xwecho_error(self):
        """Test XWEchoError can be raised."""
        with pytest.raises(XWEchoError):
            raise XWEchoError("Test error")

    def test_xwecho_error_with_cause(self):
        """Test XWEchoError with cause."""
        cause = ValueError("Original error")
        try:
            raise XWEchoError("Wrapper error", cause=cause)
        except XWEchoError as e:
            assert e.cause == cause
            assert "Original error" in str(e)

    def test_subclasses_share_base(self):
        for cls in (XWEchoValidationError, XWEchoConfigError, XWEchoSchemaError, XWEchoNumericalError, XWEchoGeometryError):
            assert issubclass(cls, XWEchoError)

    def test_exit_codes(self):
        """Each error maps to its CLI exit code."""
        assert XWEchoError("x").exit_code == ExitCode.INTERNAL
        assert XWEchoConfigError("x").exit_code == ExitCode.USAGE == 2
        assert XWEchoValidationError("x").exit_code == ExitCode.INPUT == 3
        assert XWEchoSchemaError("x").exit_code == ExitCode.INPUT
        assert XWEchoGeometryError("x").exit_code == ExitCode.INPUT
        assert XWEchoNumericalError("x").exit_code == ExitCode.NUMERICAL == 4

    def test_validation_error_string(self):
        error = XWEchoValidationError("Bad frame", field="nfft", value=511, validation_errors=["odd"])
        assert str(error) == "Bad frame | Field: nfft | Value: 511 | Errors: odd"

    def test_schema_error_carries_location(self):
        error = XWEchoSchemaError("Unparsable value", path="m.csv", line=4, column="delay_s")
        assert error.line == 4
        assert str(error) == "Unparsable value | File: m.csv | Line: 4 | Column: delay_s"

    def test_config_error_key(self):
        error = XWEchoConfigError("Missing template", key="signal.noise_template_path")
        assert "Key: signal.noise_template_path" in str(error)

    def test_numerical_and_geometry_context(self):
        assert "Operation: gcc" in str(XWEchoNumericalError("Flat", operation="gcc"))
        assert "Sensor: 13" in str(XWEchoGeometryError("Unknown", sensor=13))
