#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/errors.py
XWEcho Error Classes
This module defines all error classes raised by the xwecho library. Each
error carries the process exit code the command-line interface maps it to.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from typing import Any
from .defs import ExitCode
# ==============================================================================
# BASE EXCEPTION
# ==============================================================================


class XWEchoError(Exception):
    """
    Base exception for all XWEcho errors.
    All library exceptions extend this class so callers can catch one type
    and the CLI can map any of them to an exit code.
    """
    exit_code: ExitCode = ExitCode.INTERNAL

    def __init__(
        self,
        message: str,
        cause: Exception | None = None,
        **kwargs: Any
    ):
        """
        Initialize echo error.
        Args:
            message: Human-readable error message
            cause: Optional underlying exception that caused this error
            **kwargs: Additional context
        """
        super().__init__(message)
        self.message = message
        self.cause = cause
        self.context = kwargs

    def __str__(self) -> str:
        """Get string representation of error."""
        if self.cause:
            return f"{self.message} (caused by: {self.cause})"
        return self.message
# ==============================================================================
# VALIDATION EXCEPTIONS
# ==============================================================================


class XWEchoValidationError(XWEchoError):
    """
    Exception raised when an input value violates a precondition.
    This exception is raised when:
    - Frame lengths or PSD lengths disagree
    - A parameter is outside its admissible range
    - A signal is too short for the requested operation
    """
    exit_code = ExitCode.INPUT

    def __init__(
        self,
        message: str,
        field: str | None = None,
        value: Any = None,
        validation_errors: list[str] | None = None,
        cause: Exception | None = None,
        **kwargs: Any
    ):
        """
        Initialize validation error.
        Args:
            message: Error message
            field: Optional name of the offending argument or field
            value: Optional offending value
            validation_errors: List of validation error messages
            cause: Optional underlying exception
            **kwargs: Additional context
        """
        super().__init__(message, cause, **kwargs)
        self.field = field
        self.value = value
        self.validation_errors = validation_errors or []

    def __str__(self) -> str:
        """Get string representation."""
        parts = [self.message]
        if self.field:
            parts.append(f"Field: {self.field}")
        if self.value is not None:
            parts.append(f"Value: {self.value}")
        if self.validation_errors:
            parts.append(f"Errors: {', '.join(self.validation_errors)}")
        if self.cause:
            parts.append(f"Caused by: {self.cause}")
        return " | ".join(parts)
# ==============================================================================
# CONFIGURATION EXCEPTIONS
# ==============================================================================


class XWEchoConfigError(XWEchoError):
    """
    Exception raised when configuration cannot be loaded or is inconsistent.
    """
    exit_code = ExitCode.USAGE

    def __init__(
        self,
        message: str,
        key: str | None = None,
        validation_errors: list[str] | None = None,
        cause: Exception | None = None
    ):
        super().__init__(message, cause)
        self.key = key
        self.validation_errors = validation_errors or []

    def __str__(self) -> str:
        """Get string representation."""
        parts = [self.message]
        if self.key:
            parts.append(f"Key: {self.key}")
        if self.validation_errors:
            parts.append(f"Errors: {', '.join(self.validation_errors)}")
        if self.cause:
            parts.append(f"Caused by: {self.cause}")
        return " | ".join(parts)
# ==============================================================================
# FILE SCHEMA EXCEPTIONS
# ==============================================================================


class XWEchoSchemaError(XWEchoError):
    """
    Exception raised when an input table does not match its schema.
    The line number is 1-based and counts the header as line 1.
    """
    exit_code = ExitCode.INPUT

    def __init__(
        self,
        message: str,
        path: str | None = None,
        line: int | None = None,
        column: str | None = None,
        cause: Exception | None = None
    ):
        super().__init__(message, cause)
        self.path = path
        self.line = line
        self.column = column

    def __str__(self) -> str:
        """Get string representation."""
        parts = [self.message]
        if self.path:
            parts.append(f"File: {self.path}")
        if self.line is not None:
            parts.append(f"Line: {self.line}")
        if self.column:
            parts.append(f"Column: {self.column}")
        if self.cause:
            parts.append(f"Caused by: {self.cause}")
        return " | ".join(parts)
# ==============================================================================
# NUMERICAL EXCEPTIONS
# ==============================================================================


class XWEchoNumericalError(XWEchoError):
    """
    Exception raised when a computation cannot produce a finite result.
    This exception is raised when:
    - A weighting denominator is non-positive
    - A signal has zero variance where a correlation is required
    - A source coincides with a hydrophone
    - A belief or weight set degenerates to all zeros
    """
    exit_code = ExitCode.NUMERICAL

    def __init__(
        self,
        message: str,
        operation: str | None = None,
        cause: Exception | None = None
    ):
        super().__init__(message, cause)
        self.operation = operation

    def __str__(self) -> str:
        """Get string representation."""
        parts = [self.message]
        if self.operation:
            parts.append(f"Operation: {self.operation}")
        if self.cause:
            parts.append(f"Caused by: {self.cause}")
        return " | ".join(parts)
# ==============================================================================
# GEOMETRY EXCEPTIONS
# ==============================================================================


class XWEchoGeometryError(XWEchoError):
    """Exception raised when inputs disagree with the array geometry."""
    exit_code = ExitCode.INPUT

    def __init__(
        self,
        message: str,
        sensor: int | None = None,
        cause: Exception | None = None
    ):
        super().__init__(message, cause)
        self.sensor = sensor

    def __str__(self) -> str:
        parts = [self.message]
        if self.sensor is not None:
            parts.append(f"Sensor: {self.sensor}")
        if self.cause:
            parts.append(f"Caused by: {self.cause}")
        return " | ".join(parts)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "XWEchoError",
    "XWEchoValidationError",
    "XWEchoConfigError",
    "XWEchoSchemaError",
    "XWEchoNumericalError",
    "XWEchoGeometryError",
]
