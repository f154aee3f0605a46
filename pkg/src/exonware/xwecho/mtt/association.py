#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/mtt/association.py
Probabilistic data association for one sensor.
Each potential target (PT) is associated with at most one measurement and
each measurement with at most one legacy PT; a measurement not claimed by a
legacy PT is either a false positive or the first detection of a new PT.
Association marginals come from sum-product message passing or, when the
number of joint events is small, from exact enumeration.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass
from math import comb, perm
from typing import Sequence
import numpy as np
from scipy.special import logsumexp
from exonware.xwsystem import get_logger
from ..config import MttHyperparams
from ..contracts import IMeasurementModel
from ..defs import AssociationSolver, FloatArray, TargetKind
from ..errors import XWEchoNumericalError
from .flow import FlowSettings, edh_flow
from .targets import PotentialTarget
logger = get_logger(__name__)
_TINY = 1e-300
# ==============================================================================
# BELIEFS
# ==============================================================================


@dataclass
class AssociationBelief:
    """
    Association marginals of one sensor update.
    legacy[j, 0] is the probability that PT j generated no measurement
    (missed or absent); legacy[j, m + 1] that it generated measurement m.
    extrinsic[j] holds the messages the rest of the graph sends to PT j,
    scaled so that extrinsic[j, 0] == 1.
    """
    legacy: FloatArray
    unassociated: FloatArray
    new: FloatArray
    extrinsic: FloatArray
    iterations: int = 0
    converged: bool = True
    solver: AssociationSolver = AssociationSolver.SPA

    def entropy(self) -> float:
        """Mean Shannon entropy (nats) of the legacy association rows."""
        if self.legacy.size == 0:
            return 0.0
        p = self.legacy
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(p > 0.0, -p * np.log(p), 0.0)
        return float(terms.sum(axis=1).mean())


def count_events(n_targets: int, n_measurements: int, limit: int | None = None) -> int:
    """Number of valid joint association events; stops counting past limit."""
    total = 0
    for k in range(min(n_targets, n_measurements) + 1):
        total += comb(n_targets, k) * perm(n_measurements, k)
        if limit is not None and total > limit:
            return total
    return total


def _scale_columns(beta: FloatArray, xi: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
    """Per-measurement normalization; returns scaled (beta, xi) and the scale."""
    scale = xi + beta[:, 1:].sum(axis=0)
    scale = np.where(scale > 0.0, scale, 1.0)
    b = beta.copy()
    b[:, 1:] /= scale[None, :]
    x = np.maximum(xi / scale, 1e-12)
    b[:, 0] = np.maximum(b[:, 0], _TINY)
    return b, x, scale


def solve_spa(
    beta: FloatArray,
    xi: FloatArray,
    max_iterations: int = 200,
    tolerance: float = 1e-6,
) -> tuple[FloatArray, FloatArray, FloatArray, int, bool]:
    """
    Sum-product message passing on the association graph.
    Returns (legacy marginals, unassociated probabilities, extrinsic
    messages, iterations, converged).
    """
    b, x, scale = _scale_columns(beta, xi)
    n_targets, n_meas = b.shape[0], b.shape[1] - 1
    nu = np.ones((n_targets, n_meas))
    b0, b1 = b[:, :1], b[:, 1:]
    iterations, converged = 0, n_targets == 0 or n_meas == 0
    phi = np.zeros_like(nu)
    while not converged and iterations < max_iterations:
        iterations += 1
        weighted = b1 * nu
        phi = b1 / (b0 + weighted.sum(axis=1, keepdims=True) - weighted)
        updated = 1.0 / (x[None, :] + phi.sum(axis=0, keepdims=True) - phi)
        with np.errstate(divide="ignore", invalid="ignore"):
            delta = np.nanmax(np.abs(np.log(updated) - np.log(nu))) if nu.size else 0.0
        nu = updated
        converged = bool(delta < tolerance)
    if not converged:
        logger.warning(f"Association message passing stopped after {iterations} iterations without converging")
    weighted = b1 * nu
    phi = b1 / (b0 + weighted.sum(axis=1, keepdims=True) - weighted)
    marginals = np.concatenate([b0, weighted], axis=1)
    marginals /= marginals.sum(axis=1, keepdims=True)
    unassociated = x / (x + phi.sum(axis=0))
    extrinsic = np.concatenate([np.ones((n_targets, 1)), nu / scale[None, :]], axis=1)
    return marginals, unassociated, extrinsic, iterations, converged


def solve_exact(beta: FloatArray, xi: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
    """
    Marginals by enumeration of all joint events in which no measurement is
    shared. Returns (legacy marginals, unassociated probabilities, extrinsic).
    """
    b, x, scale = _scale_columns(beta, xi)
    n_targets, n_meas = b.shape[0], b.shape[1] - 1
    row_mass = np.zeros_like(b)
    free_mass = np.zeros(n_meas)
    assignment = [0] * n_targets
    used = np.zeros(n_meas, dtype=bool)
    total = 0.0

    def visit(j: int, weight: float) -> None:
        nonlocal total
        if j == n_targets:
            event = weight * float(np.prod(x[~used]))
            total += event
            for t, a in enumerate(assignment):
                row_mass[t, a] += event
            free_mass[~used] += event
            return
        assignment[j] = 0
        visit(j + 1, weight * b[j, 0])
        for m in range(n_meas):
            if used[m] or b[j, m + 1] == 0.0:
                continue
            used[m] = True
            assignment[j] = m + 1
            visit(j + 1, weight * b[j, m + 1])
            used[m] = False
        assignment[j] = 0

    visit(0, 1.0)
    if not total > 0.0:
        raise XWEchoNumericalError("All association events have zero weight", operation="solve_exact")
    marginals = row_mass / total
    with np.errstate(divide="ignore", invalid="ignore"):
        extrinsic = np.where(b > 0.0, row_mass / b, 0.0)
    extrinsic = extrinsic / extrinsic[:, :1]
    extrinsic[:, 1:] /= scale[None, :]
    return marginals, free_mass / total, extrinsic


def solve_association(
    beta: FloatArray,
    xi: FloatArray,
    birth_mass: FloatArray,
    solver: AssociationSolver = AssociationSolver.AUTO,
    max_iterations: int = 200,
    tolerance: float = 1e-6,
    exact_max_events: int = 4096,
) -> AssociationBelief:
    """
    Association marginals from legacy factors beta (J, M + 1), the
    unassociated-measurement weights xi (M,) and the birth share of xi.
    """
    beta = np.atleast_2d(np.asarray(beta, dtype=float))
    xi = np.asarray(xi, dtype=float)
    n_targets, n_meas = beta.shape[0], xi.size
    beta = beta.reshape(n_targets, n_meas + 1)
    if solver is AssociationSolver.AUTO:
        events = count_events(n_targets, n_meas, exact_max_events)
        solver = AssociationSolver.EXACT if events <= exact_max_events else AssociationSolver.SPA
    iterations, converged = 0, True
    if solver is AssociationSolver.EXACT:
        legacy, unassociated, extrinsic = solve_exact(beta, xi)
    else:
        legacy, unassociated, extrinsic, iterations, converged = solve_spa(beta, xi, max_iterations, tolerance)
    with np.errstate(divide="ignore", invalid="ignore"):
        birth_share = np.where(xi > 0.0, np.asarray(birth_mass, dtype=float) / xi, 0.0)
    new = np.clip(unassociated * birth_share, 0.0, 1.0)
    return AssociationBelief(legacy, unassociated, new, extrinsic, iterations, converged, solver)
# ==============================================================================
# SENSOR UPDATE
# ==============================================================================


def _legacy_factors(
    pts: Sequence[PotentialTarget],
    z: FloatArray,
    support: np.ndarray,
    model: IMeasurementModel,
    hp: MttHyperparams,
) -> tuple[FloatArray, list[FloatArray]]:
    pd = hp.detection_probability
    beta = np.zeros((len(pts), z.size + 1))
    likelihoods: list[FloatArray] = []
    for j, pt in enumerate(pts):
        lik = model.likelihood(z, pt.particles) if z.size else np.zeros((0, len(pt)))
        lik[~support] = 0.0
        likelihoods.append(lik)
        beta[j, 0] = (1.0 - pt.existence) + pt.existence * (1.0 - pd)
        beta[j, 1:] = pt.existence * pd * (lik @ pt.weights)
    return beta, likelihoods


def _update_legacy(
    pt: PotentialTarget,
    z: FloatArray,
    lik: FloatArray,
    beta_row: FloatArray,
    kappa: FloatArray,
    model: IMeasurementModel,
    hp: MttHyperparams,
    flow: FlowSettings | None,
) -> PotentialTarget:
    pd = hp.detection_probability
    r = pt.existence
    particles = pt.particles
    log_correction = np.zeros(len(pt))
    function = model.flow_function() if flow is not None else None
    if function is not None and z.size:
        alive_terms = beta_row[1:] * kappa[1:]
        conditional = alive_terms / (r * (1.0 - pd) * kappa[0] + alive_terms.sum() + _TINY)
        best = int(np.argmax(conditional))
        if conditional[best] >= flow.association_threshold:
            result = edh_flow(particles, float(z[best]), function, model.noise_std, pt.weights, flow.steps, flow.ratio)
            particles = result.particles
            log_correction = result.log_correction
            lik = model.likelihood(z, particles)
            lik[~model.in_support(z)] = 0.0
    g = (1.0 - pd) * kappa[0] + pd * (kappa[1:] @ lik) if z.size else np.full(len(pt), (1.0 - pd) * kappa[0])
    with np.errstate(divide="ignore"):
        log_terms = np.log(pt.weights) + log_correction + np.log(g)
        log_dead = np.log1p(-r) + np.log(kappa[0]) if r < 1.0 else -np.inf
    total = logsumexp(log_terms)
    if not np.isfinite(total) or r <= 0.0:
        return PotentialTarget(pt.label, particles, pt.weights, 0.0, TargetKind.LEGACY)
    log_alive = np.log(r) + total
    existence = float(np.exp(log_alive - np.logaddexp(log_alive, log_dead)))
    return PotentialTarget(pt.label, particles, np.exp(log_terms - total), existence, TargetKind.LEGACY)


def association_update(
    pts: Sequence[PotentialTarget],
    measurements: FloatArray,
    model: IMeasurementModel,
    hp: MttHyperparams,
    step: int = 0,
    rng: np.random.Generator | None = None,
    allow_births: bool = True,
    flow: FlowSettings | None = None,
) -> tuple[AssociationBelief, list[PotentialTarget], list[PotentialTarget]]:
    """
    One sensor update: association marginals, updated legacy PTs and new PTs
    labeled (step, sensor, measurement index).
    Measurements outside the model support are treated as false positives.
    """
    rng = rng if rng is not None else np.random.default_rng()
    z = np.sort(np.asarray(measurements, dtype=float).ravel())
    support = model.in_support(z) if z.size else np.zeros(0, dtype=bool)
    beta, likelihoods = _legacy_factors(pts, z, support, model, hp)
    clutter = hp.mean_false_positives * model.clutter_density(z) if z.size else np.zeros(0)
    birth_mass = np.zeros(z.size)
    births: dict[int, FloatArray] = {}
    if allow_births and hp.mean_births > 0.0:
        for m in np.flatnonzero(support):
            particles, evidence = model.sample_birth(float(z[m]), hp.num_particles, rng)
            birth_mass[m] = hp.mean_births * hp.detection_probability * evidence
            births[int(m)] = particles
    xi = np.where(support, clutter + birth_mass, 1.0)
    belief = solve_association(
        beta,
        xi,
        birth_mass,
        hp.association_solver,
        hp.spa_max_iterations,
        hp.spa_tolerance,
        hp.exact_max_events,
    )
    legacy = [
        _update_legacy(pt, z, likelihoods[j], beta[j], belief.extrinsic[j], model, hp, flow)
        for j, pt in enumerate(pts)
    ]
    new = [
        PotentialTarget((step, model.sensor, m), particles, None, float(belief.new[m]), TargetKind.NEW)
        for m, particles in births.items()
    ]
    logger.debug(
        f"Sensor {model.sensor} step {step}: {len(legacy)} legacy, {len(new)} new, {z.size} measurements"
    )
    return belief, legacy, new
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "AssociationBelief",
    "count_events",
    "solve_spa",
    "solve_exact",
    "solve_association",
    "association_update",
]
