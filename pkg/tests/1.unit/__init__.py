#!/usr/bin/env python3
"""
#exonware/xwecho/tests/1.unit/__init__.py
Unit tests for xwecho.
"""
