#!/usr/bin/env python3
"""
#exonware/xwecho/tests/2.integration/__init__.py
Integration tests for xwecho.
"""
