#!/usr/bin/env python3
"""
#exonware/xwecho/tests/0.core/conftest.py
Core-specific test fixtures for xwecho.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from itertools import product
import numpy as np
import pytest


def enumerate_marginals(beta: np.ndarray, xi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Association marginals by listing every joint event with exclusive measurements."""
    n_targets, n_meas = beta.shape[0], xi.size
    legacy = np.zeros_like(beta)
    free = np.zeros(n_meas)
    total = 0.0
    for event in product(range(n_meas + 1), repeat=n_targets):
        used = [a for a in event if a > 0]
        if len(used) != len(set(used)):
            continue
        weight = np.prod([beta[j, a] for j, a in enumerate(event)])
        unused = [m for m in range(n_meas) if m + 1 not in used]
        weight *= np.prod(xi[unused]) if unused else 1.0
        total += weight
        for j, a in enumerate(event):
            legacy[j, a] += weight
        free[unused] += weight
    return legacy / total, free / total


@pytest.fixture
def marginal_oracle():
    """Brute-force association marginals."""
    return enumerate_marginals
