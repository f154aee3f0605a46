#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/sim_tests/__init__.py
Unit tests for sim module.
"""
