#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/measurements_tests/__init__.py
Unit tests for measurements module.
"""
