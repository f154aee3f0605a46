#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/mtt/flow.py
Exact-Daum-Huang particle flow for a scalar measurement.
Particles migrate in pseudo time from the prior toward the posterior of one
measurement; importance weights correct for the Gaussian approximation of
the prior used to derive the flow.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
"""

from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from scipy.linalg import cholesky, expm, solve_triangular
from scipy.special import logsumexp
from scipy.stats import norm
from exonware.xwsystem import get_logger
from ..contracts import IMeasurementFunction
from ..defs import FloatArray
from ..errors import XWEchoValidationError
logger = get_logger(__name__)


@dataclass(frozen=True)
class FlowSettings:
    """Pseudo-time discretization and the association level that triggers a flow."""
    steps: int = 25
    ratio: float = 1.2
    association_threshold: float = 0.5


@dataclass
class FlowResult:
    """Migrated particles, their normalized weights and the per-particle log importance correction."""
    particles: FloatArray
    weights: FloatArray
    log_correction: FloatArray


def pseudo_time_steps(steps: int = 25, ratio: float = 1.2) -> FloatArray:
    """Exponentially spaced step sizes in (0, 1] that sum to one."""
    if steps < 1:
        raise XWEchoValidationError("Flow needs at least one pseudo-time step", field="steps", value=steps)
    if ratio <= 0.0:
        raise XWEchoValidationError("Step ratio must be positive", field="ratio", value=ratio)
    if np.isclose(ratio, 1.0):
        return np.full(steps, 1.0 / steps)
    first = (1.0 - ratio) / (1.0 - ratio**steps)
    return first * ratio ** np.arange(steps)


def gaussian_fit(particles: FloatArray, weights: FloatArray) -> tuple[FloatArray, FloatArray]:
    """
    Weighted mean and covariance of a particle cloud.
    Each variance is loaded by 1e-9 of itself so clouds mixing metres and
    metres per second stay positive definite in every dimension.
    """
    mean = weights @ particles
    centered = particles - mean
    cov = (centered * weights[:, None]).T @ centered
    cov = 0.5 * (cov + cov.T)
    variances = np.diag(cov)
    load = 1e-9 * np.maximum(variances, np.finfo(float).tiny / np.finfo(float).eps)
    cov = cov + np.diag(load)
    try:
        np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        logger.warning("Particle covariance not positive definite; falling back to its diagonal")
        cov = np.diag(np.diag(cov))
    return mean, cov


def gaussian_logpdf(points: FloatArray, mean: FloatArray, cov: FloatArray) -> FloatArray:
    """Log-density of N(mean, cov) at each row, through the Cholesky factor of cov."""
    lower = cholesky(cov, lower=True)
    white = solve_triangular(lower, (np.atleast_2d(points) - mean).T, lower=True)
    log_det = 2.0 * float(np.sum(np.log(np.diag(lower))))
    return -0.5 * (np.sum(white**2, axis=0) + log_det + mean.size * np.log(2.0 * np.pi))


def edh_flow(
    particles: FloatArray,
    measurement: float,
    function: IMeasurementFunction,
    noise_std: float,
    weights: FloatArray | None = None,
    steps: int = 25,
    ratio: float = 1.2,
) -> FlowResult:
    """
    Migrate particles toward the posterior of one scalar measurement.
    The flow is linearized at the moving mean; drift and offset are frozen at
    the midpoint of each pseudo-time step and integrated exactly.
    An infinite noise level leaves the particles where they are.
    """
    x = np.atleast_2d(np.asarray(particles, dtype=float))
    n, dim = x.shape
    w = np.full(n, 1.0 / n) if weights is None else np.asarray(weights, dtype=float) / np.sum(weights)
    if not np.isfinite(noise_std):
        return FlowResult(x.copy(), w.copy(), np.zeros(n))
    if noise_std <= 0.0:
        raise XWEchoValidationError("noise_std must be positive", field="noise_std", value=noise_std)
    r = noise_std**2
    mean, cov = gaussian_fit(x, w)
    eye = np.eye(dim)
    moved = x.copy()
    xbar = mean.copy()
    lam = 0.0
    log_det = 0.0
    augmented = np.zeros((dim + 1, dim + 1))
    for eps in pseudo_time_steps(steps, ratio):
        mid = lam + 0.5 * eps
        h_row = function.jacobian(xbar[None, :])[0]
        offset = function.evaluate(xbar[None, :])[0] - h_row @ xbar
        ph = cov @ h_row
        a = -0.5 * np.outer(ph, h_row) / (mid * (h_row @ ph) + r)
        b = (eye + 2.0 * mid * a) @ ((eye + mid * a) @ ph * ((measurement - offset) / r) + a @ xbar)
        augmented[:dim, :dim] = eps * a
        augmented[:dim, dim] = eps * b
        step = expm(augmented)
        moved = moved @ step[:dim, :dim].T + step[:dim, dim]
        xbar = step[:dim, :dim] @ xbar + step[:dim, dim]
        log_det += eps * float(np.trace(a))
        lam += eps
    log_correction = gaussian_logpdf(moved, mean, cov) - gaussian_logpdf(x, mean, cov) + log_det
    log_lik = norm.logpdf(measurement, loc=function.evaluate(moved), scale=noise_std)
    with np.errstate(divide="ignore"):
        log_w = np.log(w) + log_correction + log_lik
    total = logsumexp(log_w)
    if not np.isfinite(total):
        logger.debug("Flow weights degenerate; keeping prior weights")
        return FlowResult(moved, w.copy(), log_correction)
    return FlowResult(moved, np.exp(log_w - total), log_correction)
# ==============================================================================
# EXPORTS
# ==============================================================================
__all__ = [
    "FlowSettings",
    "FlowResult",
    "pseudo_time_steps",
    "gaussian_fit",
    "gaussian_logpdf",
    "edh_flow",
]
