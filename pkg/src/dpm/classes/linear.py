"""Linear and finite-basis least squares with optional norm-ball projection."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..core import Dataset, FunctionClassFitter, FunctionClassMember
from ..numerics import tensor_or_qmc_rule


@dataclass(frozen=True)
class LinearModel:
    beta: np.ndarray
    intercept: Optional[float]
    norm_bound: float
    converged: bool = True


@dataclass(frozen=True)
class FiniteBasisModel:
    basis: tuple
    alpha: np.ndarray
    l2_bound: float


def _solve_ls(design: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    sol, _, rank, _ = np.linalg.lstsq(design, rhs, rcond=None)
    if rank < design.shape[1]:
        # fall back to jittered normal equations before giving up
        gram = design.T @ design
        jitter = 1e-10 * max(1.0, float(np.max(np.abs(gram))))
        try:
            sol = np.linalg.solve(gram + jitter * np.eye(gram.shape[0]), design.T @ rhs)
        except np.linalg.LinAlgError as exc:
            raise np.linalg.LinAlgError(
                f"design rank {rank} < {design.shape[1]} and jitter failed") from exc
    return sol


def fit_linear_ols(data: Dataset, residual: np.ndarray, include_intercept: bool = True,
                   norm_bound: float = math.inf, ridge_gamma: float = 0.0) -> FunctionClassMember:
    """Least-squares linear fit of a residual vector.

    Solves ``argmin ||r - Xb - a||_n^2`` (intercept optional).  When
    ``ridge_gamma`` > 0 the objective gains ``(gamma/2)||f||_n^2``, which
    shrinks the OLS solution by 2/(2+gamma).  If the joint coefficient
    norm exceeds ``norm_bound`` the vector is rescaled onto the ball.
    Returns a linear FunctionClassMember carrying a LinearModel.
    """
    residual = np.asarray(residual, dtype=float).ravel()
    if residual.size != data.n:
        raise ValueError("residual length must match dataset")
    cols = [data.X]
    if include_intercept:
        cols.append(np.ones((data.n, 1)))
    design = np.hstack(cols)
    coef = _solve_ls(design, residual)
    if ridge_gamma > 0.0:
        coef = coef * (2.0 / (2.0 + ridge_gamma))
    norm = float(np.sqrt(coef @ coef))
    if norm > norm_bound:
        coef = coef * (norm_bound / norm)
    beta = coef[:data.p]
    intercept = float(coef[data.p]) if include_intercept else None

    def evaluator(points, _b=beta.copy(), _a=intercept):
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        out = pts @ _b
        return out + _a if _a is not None else out

    fitted = evaluator(data.X)
    penalty = (ridge_gamma / 2.0) * float(fitted @ fitted) / data.n if ridge_gamma > 0.0 else 0.0
    model = LinearModel(beta, intercept, norm_bound)
    return FunctionClassMember("linear", evaluator, penalty, coefficients=model)


def fit_finite_basis(basis: Sequence[Callable], data: Dataset, residual: np.ndarray,
                     l2_bound: float = math.inf) -> FunctionClassMember:
    """Least squares over span{phi_1..phi_k} with optional L2-ball projection.

    The L2 norm of the fitted function is estimated by quadrature over the
    (rescaled) domain; if it exceeds ``l2_bound`` the coefficients are
    rescaled onto the ball.
    """
    residual = np.asarray(residual, dtype=float).ravel()
    design = np.column_stack([np.asarray(phi(data.X if data.p > 1 else data.X[:, 0]),
                                         dtype=float) for phi in basis])
    alpha = _solve_ls(design, residual)
    if math.isfinite(l2_bound):
        rule = tensor_or_qmc_rule(data.p, 64 if data.p == 1 else 1024)
        lo = np.array([b[0] for b in data.omega_bounds])
        hi = np.array([b[1] for b in data.omega_bounds])
        pts = lo + rule.points * (hi - lo)
        vals = np.column_stack([np.asarray(phi(pts if data.p > 1 else pts[:, 0]), dtype=float)
                                for phi in basis]) @ alpha
        norm = math.sqrt(max(rule.integrate(vals * vals), 0.0))
        if norm > l2_bound:
            alpha = alpha * (l2_bound / norm)

    def evaluator(points, _basis=tuple(basis), _alpha=alpha.copy(), _p=data.p):
        pts = np.asarray(points, dtype=float)
        arg = pts if _p > 1 else (pts[:, 0] if pts.ndim > 1 else pts)
        cols = np.column_stack([np.asarray(phi(arg), dtype=float) for phi in _basis])
        return cols @ _alpha

    model = FiniteBasisModel(tuple(basis), alpha, l2_bound)
    return FunctionClassMember("finite-basis", evaluator, 0.0, coefficients=model)


class LinearFitter(FunctionClassFitter):
    """Interpretable class: linear (optionally ridge-penalized) fits."""

    def __init__(self, include_intercept: bool = True, norm_bound: float = math.inf,
                 ridge_gamma: float = 0.0):
        self.include_intercept = include_intercept
        self.norm_bound = norm_bound
        self.ridge_gamma = ridge_gamma

    def fit(self, data: Dataset, residual: np.ndarray) -> FunctionClassMember:
        return fit_linear_ols(data, residual, self.include_intercept,
                              self.norm_bound, self.ridge_gamma)


class FiniteBasisFitter(FunctionClassFitter):
    def __init__(self, basis: Sequence[Callable], l2_bound: float = math.inf):
        self.basis = tuple(basis)
        self.l2_bound = l2_bound

    def fit(self, data: Dataset, residual: np.ndarray) -> FunctionClassMember:
        return fit_finite_basis(self.basis, data, residual, self.l2_bound)
