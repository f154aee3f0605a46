#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/tracking_tests/__init__.py
Unit tests for tracking module.
"""
