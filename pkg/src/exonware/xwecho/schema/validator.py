"""
Configuration schema validation for xwecho.
Uses xwschema for validation logic.
"""

from typing import Any
from exonware.xwsystem import get_logger
from exonware.xwdata import XWData
from exonware.xwschema import XWSchema
from .contracts import IConfigSchemaValidator
from .definitions import CONFIG_SCHEMA
from ..errors import XWEchoConfigError
logger = get_logger(__name__)


class ConfigSchemaValidator(IConfigSchemaValidator):
    """Validate configuration and geometry trees using xwschema."""

    def __init__(self, schema: dict[str, Any] | None = None):
        self._schema = schema or CONFIG_SCHEMA
        logger.debug("ConfigSchemaValidator initialized")

    def validate_config(
        self,
        data: dict[str, Any],
        schema: dict[str, Any] | None = None,
    ) -> dict[str, Any]:
        try:
            validator = XWSchema(schema or self._schema)
            is_valid, errors = validator.validate_sync(XWData.from_native(data))
            if isinstance(errors, list):
                messages = [str(e.get("message", e)) if isinstance(e, dict) else str(e) for e in errors]
            else:
                messages = [str(errors)] if errors else []
            return {'valid': bool(is_valid), 'errors': messages}
        except Exception as e:
            logger.error(f"Configuration validation failed: {e}")
            return {'valid': False, 'errors': [f"Validation error: {str(e)}"]}

    def check(
        self,
        data: dict[str, Any],
        schema: dict[str, Any] | None = None,
        source: str | None = None,
    ) -> None:
        result = self.validate_config(data, schema)
        if not result['valid']:
            where = f" in {source}" if source else ""
            logger.error(f"Configuration rejected{where}: {result['errors']}")
            raise XWEchoConfigError(
                f"Configuration does not match schema{where}",
                key=source,
                validation_errors=result['errors'],
            )
