#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/mtt_tests/__init__.py
Unit tests for mtt module.
"""
