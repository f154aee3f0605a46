#!/usr/bin/env python3
"""
#exonware/xwecho/tests/0.core/test_core_association.py
Core association checks against brute-force enumeration.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
import numpy as np
import pytest
from exonware.xwecho import AssociationSolver, solve_association, solve_spa


def _random_instance(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    n_targets = int(rng.integers(1, 4))
    n_meas = int(rng.integers(1, 4))
    beta = rng.uniform(0.05, 1.0, size=(n_targets, n_meas + 1))
    xi = rng.uniform(0.05, 1.0, size=n_meas)
    return beta, xi
@pytest.mark.xwecho_core

class TestCoreAssociation:
    """Association marginals of small problems."""

    def test_auto_solver_matches_enumeration(self, marginal_oracle):
        """AUTO marginals equal brute force on 1000 random problems of up to 3 x 3."""
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            beta, xi = _random_instance(rng)
            belief = solve_association(beta, xi, np.zeros_like(xi), AssociationSolver.AUTO)
            legacy, free = marginal_oracle(beta, xi)
            assert belief.solver is AssociationSolver.EXACT
            assert np.max(np.abs(belief.legacy - legacy)) < 1e-9
            assert np.max(np.abs(belief.unassociated - free)) < 1e-9

    def test_spa_exact_for_single_target(self, marginal_oracle):
        """Message passing is exact when the graph is a tree (one target)."""
        rng = np.random.default_rng(5)
        for _ in range(50):
            beta = rng.uniform(0.05, 1.0, size=(1, 4))
            xi = rng.uniform(0.05, 1.0, size=3)
            legacy, unassociated, _, _, converged = solve_spa(beta, xi, 500, 1e-12)
            expected_legacy, expected_free = marginal_oracle(beta, xi)
            assert converged
            assert np.allclose(legacy, expected_legacy, atol=1e-9)
            assert np.allclose(unassociated, expected_free, atol=1e-9)

    def test_spa_exact_for_single_measurement(self, marginal_oracle):
        """Message passing is exact with one measurement and several targets."""
        rng = np.random.default_rng(6)
        for _ in range(50):
            beta = rng.uniform(0.05, 1.0, size=(3, 2))
            xi = rng.uniform(0.05, 1.0, size=1)
            legacy, unassociated, _, _, _ = solve_spa(beta, xi, 500, 1e-12)
            expected_legacy, expected_free = marginal_oracle(beta, xi)
            assert np.allclose(legacy, expected_legacy, atol=1e-9)
            assert np.allclose(unassociated, expected_free, atol=1e-9)

    def test_spa_close_to_exact_on_loopy_graph(self, marginal_oracle):
        """Loopy message passing stays near the exact marginals."""
        beta = np.array([[0.2, 0.9, 0.1], [0.2, 0.1, 0.9]])
        xi = np.array([0.3, 0.3])
        legacy, _, _, _, converged = solve_spa(beta, xi)
        expected, _ = marginal_oracle(beta, xi)
        assert converged
        assert np.max(np.abs(legacy - expected)) < 0.1

    def test_rows_are_distributions(self):
        """Legacy rows sum to one and unassociated probabilities lie in [0, 1]."""
        rng = np.random.default_rng(9)
        beta = rng.uniform(0.0, 1.0, size=(6, 8))
        xi = rng.uniform(0.0, 1.0, size=7)
        belief = solve_association(beta, xi, xi / 2.0, AssociationSolver.SPA)
        assert np.allclose(belief.legacy.sum(axis=1), 1.0)
        assert np.all((belief.unassociated >= 0.0) & (belief.unassociated <= 1.0))
        assert np.allclose(belief.new, belief.unassociated / 2.0)
