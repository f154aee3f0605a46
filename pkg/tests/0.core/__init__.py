# Core tests for xwecho
