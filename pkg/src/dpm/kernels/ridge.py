"""Kernel ridge regression with the closed-form dual update and GCV."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..core import Dataset, FunctionClassFitter, FunctionClassMember
from ..numerics import cholesky_solve
from .matern import MaternSpec, matern_gram
from .projection import ProjectedKernel

__all__ = ["KernelRidgeModel", "KernelRidgeFitter", "kernel_ridge_fit",
           "gcv_select_lambda", "rkhs_norm_sq"]

KernelLike = Union[MaternSpec, ProjectedKernel]


def kernel_block(kernel: KernelLike, A: np.ndarray, B: np.ndarray | None = None) -> np.ndarray:
    if isinstance(kernel, ProjectedKernel):
        return kernel.gram(A, B)
    if isinstance(kernel, MaternSpec):
        return matern_gram(kernel, A, B)
    raise TypeError(f"unsupported kernel type {type(kernel).__name__}")


@dataclass(frozen=True)
class KernelRidgeModel:
    """Dual-form ridge fit: alpha = (K + n*lambda*I)^{-1} residual."""

    centers: np.ndarray          # training points on the unit cube
    alpha: np.ndarray
    lam: float
    kernel: KernelLike
    gram_matrix: np.ndarray

    def predict_unit(self, unit_points: np.ndarray) -> np.ndarray:
        return kernel_block(self.kernel, unit_points, self.centers) @ self.alpha


def rkhs_norm_sq(model: KernelRidgeModel) -> float:
    """Squared RKHS norm of the fitted function: alpha^T K alpha."""
    return float(model.alpha @ model.gram_matrix @ model.alpha)


def kernel_ridge_fit(kernel: KernelLike, data: Dataset, residual: np.ndarray,
                     lam: float, gram: np.ndarray | None = None) -> FunctionClassMember:
    """Fit g by kernel ridge on a residual vector.

    alpha = (K + n*lambda*I)^{-1} r on the rescaled design; the penalty
    recorded on the member is lambda * alpha^T K alpha.
    """
    if not lam > 0.0:
        raise ValueError("lambda must be positive")
    residual = np.asarray(residual, dtype=float).ravel()
    if residual.size != data.n:
        raise ValueError("residual length must match dataset")
    centers = data.unit_X
    K = kernel_block(kernel, centers) if gram is None else gram
    alpha = cholesky_solve(K + data.n * lam * np.eye(data.n), residual).solution
    model = KernelRidgeModel(centers, alpha, lam, kernel, K)

    def evaluator(points, _model=model, _to_unit=data.to_unit):
        return _model.predict_unit(_to_unit(points))

    penalty = lam * rkhs_norm_sq(model)
    return FunctionClassMember("kernel-expansion", evaluator, penalty, coefficients=model)


@dataclass(frozen=True)
class GcvPoint:
    lam: float
    n_lam: float
    score: float
    valid: bool


def gcv_select_lambda(kernel: KernelLike, data: Dataset, residual: np.ndarray,
                      grid: Optional[np.ndarray] = None) -> tuple[float, list[GcvPoint]]:
    """Pick lambda on a grid by generalized cross validation.

    GCV(lambda) = (1/n)||(I-A)r||^2 / ((1/n) tr(I-A))^2 with the smoother
    A = K (K + n*lambda*I)^{-1}.  Grid points where tr(I-A) <= 0 are
    flagged invalid and skipped.  Default grid: 20 log-spaced values of
    n*lambda in [1e-6, 1e2].
    """
    residual = np.asarray(residual, dtype=float).ravel()
    n = data.n
    if grid is None:
        grid = np.logspace(-6.0, 2.0, 20) / n
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0 or np.any(grid <= 0.0):
        raise ValueError("grid must be non-empty positive lambdas")
    K = kernel_block(kernel, data.unit_X)
    curve: list[GcvPoint] = []
    best_lam, best_score = None, np.inf
    eye = np.eye(n)
    for lam in grid:
        n_lam = n * lam
        inv = cholesky_solve(K + n_lam * eye, eye).solution
        resid_vec = n_lam * (inv @ residual)
        tr = n_lam * float(np.trace(inv))
        if tr <= 0.0:
            curve.append(GcvPoint(float(lam), float(n_lam), float("nan"), False))
            continue
        score = float(np.mean(resid_vec ** 2)) / ((tr / n) ** 2)
        curve.append(GcvPoint(float(lam), float(n_lam), score, True))
        if score < best_score:
            best_score, best_lam = score, float(lam)
    if best_lam is None:
        raise ValueError("no valid grid point for GCV")
    return best_lam, curve


class KernelRidgeFitter(FunctionClassFitter):
    """Flexible class: kernel ridge with fixed or GCV-selected lambda.

    With ``lam=None`` the penalty is chosen by GCV on the first residual
    this fitter sees and frozen for later calls, matching the protocol of
    selecting lambda once at the start of the alternation.
    """

    def __init__(self, kernel: KernelLike, lam: Optional[float] = None,
                 gcv_grid: Optional[np.ndarray] = None):
        self.kernel = kernel
        self.lam = lam
        self.gcv_grid = gcv_grid
        self.gcv_curve: Optional[list[GcvPoint]] = None
        self._gram_cache: tuple[Optional[Dataset], Optional[np.ndarray]] = (None, None)

    def _gram_for(self, data: Dataset) -> np.ndarray:
        cached_data, cached_K = self._gram_cache
        if cached_data is data:
            return cached_K
        K = kernel_block(self.kernel, data.unit_X)
        self._gram_cache = (data, K)
        return K

    def fit(self, data: Dataset, residual: np.ndarray) -> FunctionClassMember:
        if self.lam is None:
            self.lam, self.gcv_curve = gcv_select_lambda(
                self.kernel, data, residual, self.gcv_grid)
        return kernel_ridge_fit(self.kernel, data, residual, self.lam,
                                gram=self._gram_for(data))
