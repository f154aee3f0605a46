"""
Schema integration for xwecho.
Validate configuration and geometry files using xwschema.
"""

from .contracts import IConfigSchemaValidator
from .definitions import CONFIG_SCHEMA, GEOMETRY_SCHEMA, HYPERPARAMETER_SCHEMA
from .validator import ConfigSchemaValidator
__all__ = [
    'IConfigSchemaValidator',
    'ConfigSchemaValidator',
    'CONFIG_SCHEMA',
    'GEOMETRY_SCHEMA',
    'HYPERPARAMETER_SCHEMA',
]
