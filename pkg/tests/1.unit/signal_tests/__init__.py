#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/signal_tests/__init__.py
Unit tests for signal module.
"""
