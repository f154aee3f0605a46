# Tests for xwecho library
