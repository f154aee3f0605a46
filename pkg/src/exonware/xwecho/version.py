#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/version.py
Version information for xwecho library.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

__version__ = "0.1.0.1"
# Release date (DD-MMM-YYYY). Fixed so run manifests stay reproducible.
__date__ = "18-Oct-2026"


def get_date() -> str:
    """Get the release date (DD-MMM-YYYY)."""
    return __date__
