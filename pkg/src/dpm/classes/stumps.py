"""Gradient-boosted depth-1 regression stumps with L2 leaf shrinkage."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import Dataset, FunctionClassFitter, FunctionClassMember


@dataclass(frozen=True)
class Stump:
    feature: int
    threshold: float
    left_value: float   # x[feature] <= threshold
    right_value: float


@dataclass(frozen=True)
class StumpEnsemble:
    rounds: tuple[Stump, ...]
    learning_rate: float
    lambda_g: float

    def predict(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        out = np.zeros(pts.shape[0])
        for st in self.rounds:
            go_left = pts[:, st.feature] <= st.threshold
            out += np.where(go_left, st.left_value, st.right_value)
        return out


def _presort(X: np.ndarray):
    # sort once per fit; every boosting round reuses the same order
    cols = []
    for j in range(X.shape[1]):
        xj = X[:, j]
        order = np.argsort(xj, kind="stable")
        xs = xj[order]
        if xs[0] == xs[-1]:
            cols.append(None)  # constant column: nothing to split on
            continue
        cut = np.flatnonzero(xs[:-1] < xs[1:])  # split between distinct values
        cols.append((order, xs, cut, cut + 1.0, X.shape[0] - (cut + 1.0)))
    return cols


def _best_stump(sorted_cols, resid: np.ndarray, n_lambda: float):
    # maximize sum_L^2/(n_L + n*lambda) + sum_R^2/(n_R + n*lambda)
    best = None
    best_gain = -np.inf
    for j, col in enumerate(sorted_cols):
        if col is None:
            continue
        order, xs, cut, nl, nr = col
        csum = np.cumsum(resid[order])
        total = csum[-1]
        sl = csum[cut]
        sr = total - sl
        gain = sl ** 2 / (nl + n_lambda) + sr ** 2 / (nr + n_lambda)
        k = int(np.argmax(gain))
        if gain[k] > best_gain:
            i = cut[k]
            best_gain = float(gain[k])
            best = (j, float(0.5 * (xs[i] + xs[i + 1])),
                    float(sl[k] / (nl[k] + n_lambda)), float(sr[k] / (nr[k] + n_lambda)))
    return best


def fit_boosted_stumps(data: Dataset, residual: np.ndarray, lambda_g: float,
                       max_rounds: int = 10, learning_rate: float = 0.3) -> FunctionClassMember:
    """Greedy boosted stumps on a residual vector.

    Each round fits the least-squares stump with shrunk leaves
    ``sum(resid in leaf) / (count + n*lambda_g)``, scaled by the learning
    rate, and updates the residual.  Penalty value is lambda_g times the
    sum of squared (stored, rate-scaled) leaf values.  If every feature is
    constant the ensemble falls back to shrunk-mean single leaves.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    if not 0.0 < learning_rate <= 1.0:
        raise ValueError("learning_rate must be in (0, 1]")
    if lambda_g < 0.0:
        raise ValueError("lambda_g must be non-negative")
    resid = np.asarray(residual, dtype=float).ravel().copy()
    if resid.size != data.n:
        raise ValueError("residual length must match dataset")
    X = data.X
    n_lambda = data.n * lambda_g
    sorted_cols = _presort(X)
    stumps = []
    for _ in range(max_rounds):
        found = _best_stump(sorted_cols, resid, n_lambda)
        if found is None:
            value = learning_rate * float(resid.sum() / (data.n + n_lambda))
            st = Stump(0, np.inf, value, value)
        else:
            j, thr, left, right = found
            st = Stump(j, thr, learning_rate * left, learning_rate * right)
        pred = np.where(X[:, st.feature] <= st.threshold, st.left_value, st.right_value)
        resid -= pred
        stumps.append(st)
    ensemble = StumpEnsemble(tuple(stumps), learning_rate, lambda_g)
    penalty = lambda_g * float(sum(s.left_value ** 2 + s.right_value ** 2 for s in stumps))
    return FunctionClassMember("stump-ensemble", ensemble.predict, penalty,
                               coefficients=ensemble)


class StumpFitter(FunctionClassFitter):
    def __init__(self, lambda_g: float, max_rounds: int = 10, learning_rate: float = 0.3):
        self.lambda_g = lambda_g
        self.max_rounds = max_rounds
        self.learning_rate = learning_rate

    def fit(self, data: Dataset, residual: np.ndarray) -> FunctionClassMember:
        return fit_boosted_stumps(data, residual, self.lambda_g,
                                  self.max_rounds, self.learning_rate)
