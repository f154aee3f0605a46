#!/usr/bin/env python3
"""
#exonware/xwecho/tests/2.integration/runner.py
Integration test runner for xwecho
Runs integration and scenario tests.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

import sys
from pathlib import Path
# Configure UTF-8 encoding for Windows console
from exonware.xwsystem.console.cli import ensure_utf8_console
ensure_utf8_console()
# Add src to path
src_path = Path(__file__).parent.parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))
from exonware.xwsystem.utils.test_runner import TestRunner
if __name__ == "__main__":
    runner = TestRunner(
        library_name="xwecho",
        layer_name="2.integration",
        description="Integration Tests - Waveform-to-track and Monte-Carlo scenarios",
        test_dir=Path(__file__).parent,
        markers=["xwecho_integration"]
    )
    sys.exit(runner.run())
