"""L1-penalized linear fits by cyclic coordinate descent."""

from __future__ import annotations

import math

import numpy as np

from ..core import Dataset, FunctionClassFitter, FunctionClassMember
from .linear import LinearModel


def _standardize(X: np.ndarray):
    # zero mean, unit empirical norm per column; constant columns flagged out
    n = X.shape[0]
    mean = X.mean(axis=0)
    centered = X - mean
    scale = np.sqrt((centered ** 2).sum(axis=0) / n)
    active = scale > 0.0
    Z = np.zeros_like(centered)
    Z[:, active] = centered[:, active] / scale[active]
    return Z, mean, scale, active


def lasso_lambda_max(data: Dataset, residual: np.ndarray) -> float:
    """Smallest lambda_f with all-zero slopes: max_j |(2/n)<z_j, r_centered>|."""
    residual = np.asarray(residual, dtype=float).ravel()
    Z, _, _, active = _standardize(data.X)
    rc = residual - residual.mean()
    if not np.any(active):
        return 0.0
    return float(np.max(np.abs(2.0 * (Z[:, active].T @ rc) / data.n)))


def fit_lasso(data: Dataset, residual: np.ndarray, lambda_f: float,
              max_sweeps: int = 1000, tol: float = 1e-8) -> FunctionClassMember:
    """Minimize (1/n)||r - a - Xb||^2 + lambda_f * ||b||_1 (standardized scale).

    Features are standardized internally; the intercept is unpenalized.
    Coordinate updates are the soft threshold b_j <- S(<z_j, rho>/n, lambda_f/2)
    since columns have unit empirical norm.  Stops when the largest
    coefficient change in a sweep drops below ``tol``; a run that exhausts
    ``max_sweeps`` is returned with ``converged=False``.
    """
    if lambda_f < 0.0:
        raise ValueError("lambda_f must be non-negative")
    residual = np.asarray(residual, dtype=float).ravel()
    if residual.size != data.n:
        raise ValueError("residual length must match dataset")
    n = data.n
    Z, mean, scale, active_cols = _standardize(data.X)
    r_mean = residual.mean()
    rc = residual - r_mean

    beta = np.zeros(data.p)
    work = rc.copy()  # current partial residual rc - Z @ beta
    half = lambda_f / 2.0
    converged = False
    idx = np.flatnonzero(active_cols)
    for _ in range(max_sweeps):
        biggest = 0.0
        for j in idx:
            zj = Z[:, j]
            rho = (work @ zj) / n + beta[j]   # <z_j, rc - sum_{k!=j} z_k b_k>/n
            new = math.copysign(max(abs(rho) - half, 0.0), rho)
            if new != beta[j]:
                work += zj * (beta[j] - new)
                biggest = max(biggest, abs(new - beta[j]))
                beta[j] = new
        if biggest < tol:
            converged = True
            break

    # back to the original feature scale
    beta_orig = np.zeros(data.p)
    beta_orig[active_cols] = beta[active_cols] / scale[active_cols]
    intercept = float(r_mean - mean @ beta_orig)
    penalty = lambda_f * float(np.abs(beta).sum())

    def evaluator(points, _b=beta_orig.copy(), _a=intercept):
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        return pts @ _b + _a

    model = LinearModel(beta_orig, intercept, math.inf, converged=converged)
    return FunctionClassMember("linear", evaluator, penalty, coefficients=model)


class LassoFitter(FunctionClassFitter):
    def __init__(self, lambda_f: float, max_sweeps: int = 1000, tol: float = 1e-8):
        self.lambda_f = lambda_f
        self.max_sweeps = max_sweeps
        self.tol = tol

    def fit(self, data: Dataset, residual: np.ndarray) -> FunctionClassMember:
        return fit_lasso(data, residual, self.lambda_f, self.max_sweeps, self.tol)
