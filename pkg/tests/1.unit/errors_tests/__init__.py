#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/errors_tests/__init__.py
Unit tests for errors module.
"""
