"""
Schema integration contracts for xwecho.
Company: eXonware.com
"""

from typing import Any, Protocol, runtime_checkable
@runtime_checkable


class IConfigSchemaValidator(Protocol):
    """Interface for validating configuration trees against a schema."""

    def validate_config(
        self,
        data: dict[str, Any],
        schema: dict[str, Any] | None = None,
    ) -> dict[str, Any]:
        """Validate a tree. Returns dict with 'valid' (bool) and 'errors' (list)."""
        ...

    def check(
        self,
        data: dict[str, Any],
        schema: dict[str, Any] | None = None,
        source: str | None = None,
    ) -> None:
        """Validate a tree and raise on the first failing validation."""
        ...
