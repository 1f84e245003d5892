"""Repeated K-fold cross-validation of double-penalty fits.

Predictions are strictly out-of-fold: each observation's value comes
from models trained on folds that exclude it, then gets averaged over
repeats.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classes import LassoFitter, LinearFitter, StumpFitter
from .core import Dataset, FunctionClassFitter
from .fitter import StoppingRule, fit_double_penalty
from .kernels import KernelRidgeFitter, MaternSpec

INTERP_CHOICES = ("linear", "lasso")
FLEX_CHOICES = ("kernel", "stumps")


@dataclass(frozen=True)
class CvConfig:
    folds: int = 5
    repeats: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.folds < 2:
            raise ValueError("folds must be at least 2")
        if self.repeats < 1:
            raise ValueError("repeats must be at least 1")


@dataclass(frozen=True)
class LearnerPair:
    """Which interpretable / flexible class the sweep fits.

    ``lambda_f`` maps to the lasso penalty for "lasso" and to the ridge
    curvature for "linear"; ``lambda_g`` is the ridge penalty for
    "kernel" and the leaf shrinkage for "stumps".
    """

    interp: str = "lasso"
    flex: str = "stumps"

    def __post_init__(self):
        if self.interp not in INTERP_CHOICES:
            raise ValueError(f"interp must be one of {INTERP_CHOICES}")
        if self.flex not in FLEX_CHOICES:
            raise ValueError(f"flex must be one of {FLEX_CHOICES}")

    def fitters(self, data: Dataset, lambda_f: float,
                lambda_g: float) -> tuple[FunctionClassFitter, FunctionClassFitter]:
        if lambda_f < 0 or lambda_g <= 0:
            raise ValueError("lambda_f must be >= 0 and lambda_g > 0")
        if self.interp == "linear":
            fitter_f = LinearFitter(ridge_gamma=lambda_f)
        else:
            fitter_f = LassoFitter(lambda_f)
        if self.flex == "stumps":
            fitter_g = StumpFitter(lambda_g)
        else:
            spec = MaternSpec(nu=3.5 + data.p / 2.0, p=data.p, phi=1.0)
            fitter_g = KernelRidgeFitter(spec, lam=lambda_g)
        return fitter_f, fitter_g


class CvCellError(RuntimeError):
    """A fold fit failed; message identifies the (repeat, fold) cell."""


def fold_indices(n: int, cv: CvConfig) -> list[list[np.ndarray]]:
    """Per-repeat uniform random partitions into ``cv.folds`` test folds."""
    rng = np.random.default_rng(cv.seed)
    out = []
    for _ in range(cv.repeats):
        perm = rng.permutation(n)
        out.append(np.array_split(perm, cv.folds))
    return out


def cross_validated_predictions(data: Dataset, pair: LearnerPair,
                                lambda_f: float, lambda_g: float,
                                cv: CvConfig,
                                stop: StoppingRule = StoppingRule()) -> tuple[np.ndarray, np.ndarray]:
    """Out-of-fold f and g predictions, averaged across repeats."""
    if data.n < cv.folds:
        raise ValueError(f"n={data.n} is smaller than folds={cv.folds}")
    f_sum = np.zeros(data.n)
    g_sum = np.zeros(data.n)
    for repeat, folds in enumerate(fold_indices(data.n, cv)):
        for fold, test_idx in enumerate(folds):
            train_idx = np.setdiff1d(np.arange(data.n), test_idx)
            train = data.subset(train_idx)
            fitter_f, fitter_g = pair.fitters(train, lambda_f, lambda_g)
            try:
                fit = fit_double_penalty(train, fitter_f, fitter_g, stop=stop)
            except Exception as exc:
                raise CvCellError(
                    f"fit failed at repeat {repeat}, fold {fold}: {exc}") from exc
            held_out = data.X[test_idx]
            f_sum[test_idx] += fit.f_hat(held_out)
            g_sum[test_idx] += fit.g_hat(held_out)
    return f_sum / cv.repeats, g_sum / cv.repeats
