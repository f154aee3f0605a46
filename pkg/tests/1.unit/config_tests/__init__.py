#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/config_tests/__init__.py
Unit tests for config module.
"""
