#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/pipeline_tests/__init__.py
Unit tests for pipeline module.
"""
