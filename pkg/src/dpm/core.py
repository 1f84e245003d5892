"""Core data model: datasets, empirical geometry, fitting contracts."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

DESCRIPTORS = ("linear", "finite-basis", "kernel-expansion", "stump-ensemble")


def empirical_inner(a: np.ndarray, b: np.ndarray) -> float:
    """(1/n) sum a_i b_i."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1 or a.size == 0:
        raise ValueError(f"need equal-length vectors, got {a.shape} and {b.shape}")
    return float(a @ b) / a.size


def empirical_norm(a: np.ndarray) -> float:
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("need a non-empty vector")
    return float(np.sqrt((a @ a) / a.size))


def objective(data: "Dataset", f_vals: np.ndarray, g_vals: np.ndarray,
              lf_val: float, lg_val: float) -> float:
    """(1/n) sum (y_i - f_i - g_i)^2 + L_f + L_g."""
    resid = data.y - np.asarray(f_vals, float) - np.asarray(g_vals, float)
    if resid.shape != data.y.shape:
        raise ValueError("f and g values must match the dataset length")
    return empirical_inner(resid, resid) + lf_val + lg_val


class Dataset:
    """Design points in a rectangular domain plus responses.

    Internally everything operates on the affine rescaling of the domain
    to the unit cube; `unit_X` exposes it.  `omega_bounds` defaults to
    [0,1]^p, in which case `unit_X` is `X` itself.
    """

    def __init__(self, X: np.ndarray, y: np.ndarray,
                 omega_bounds: Optional[Sequence[tuple[float, float]]] = None):
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        y = np.asarray(y, dtype=float).ravel()
        if X.ndim != 2 or X.shape[0] != y.size or y.size < 1:
            raise ValueError(f"inconsistent shapes: X {X.shape}, y {y.shape}")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
            raise ValueError("dataset entries must be finite")
        p = X.shape[1]
        if omega_bounds is None:
            omega_bounds = [(0.0, 1.0)] * p
        bounds = [(float(lo), float(hi)) for lo, hi in omega_bounds]
        if len(bounds) != p or any(hi <= lo for lo, hi in bounds):
            raise ValueError("omega_bounds needs one (lo, hi) pair per dimension, lo < hi")
        lo = np.array([b[0] for b in bounds])
        hi = np.array([b[1] for b in bounds])
        tol = 1e-9 * np.maximum(hi - lo, 1.0)
        if np.any(X < lo - tol) or np.any(X > hi + tol):
            raise ValueError("design points fall outside omega_bounds")
        self.X = X
        self.y = y
        self.omega_bounds = tuple(bounds)
        self._lo, self._hi = lo, hi

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def p(self) -> int:
        return self.X.shape[1]

    @property
    def unit_X(self) -> np.ndarray:
        return (self.X - self._lo) / (self._hi - self._lo)

    def to_unit(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        if points.ndim == 1:
            points = points[:, None]
        return (points - self._lo) / (self._hi - self._lo)

    def subset(self, idx: np.ndarray) -> "Dataset":
        return Dataset(self.X[idx], self.y[idx], self.omega_bounds)


@dataclass(frozen=True)
class FunctionClassMember:
    """An evaluable fitted function with its penalty value.

    `evaluator` maps points in the original domain (m x p array, or a
    1-D array when p = 1) to fitted values; `coefficients` carries the
    descriptor-specific parameterization.
    """

    descriptor: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    penalty_value: float
    coefficients: object = None

    def __post_init__(self):
        if self.descriptor not in DESCRIPTORS:
            raise ValueError(f"unknown descriptor {self.descriptor!r}")
        if not self.penalty_value >= 0.0:
            raise ValueError("penalty_value must be non-negative")

    def __call__(self, points: np.ndarray) -> np.ndarray:
        return self.evaluator(points)


class FunctionClassFitter(ABC):
    """Solve argmin over the class of ||r - h||_n^2 + L(h) for residual r.

    Implementations must never return a member whose penalized objective
    on the residual exceeds that of the zero function.
    """

    @abstractmethod
    def fit(self, data: Dataset, residual: np.ndarray) -> FunctionClassMember:
        ...


@dataclass(frozen=True)
class TraceRecord:
    """One Algorithm-1 iteration: changes, penalties, optional oracle distance."""

    iteration: int
    objective: float
    delta_f: float
    delta_g: float
    penalty_f: float
    penalty_g: float
    ref_distance: Optional[float] = None


STOP_REASONS = ("max-iters", "objective-tol", "change-tol")


@dataclass(frozen=True)
class AdditiveFit:
    f_hat: FunctionClassMember
    g_hat: FunctionClassMember
    trace: tuple[TraceRecord, ...] = field(default_factory=tuple)
    stop_reason: str = "max-iters"

    def __post_init__(self):
        if self.stop_reason not in STOP_REASONS:
            raise ValueError(f"unknown stop_reason {self.stop_reason!r}")

    def predict(self, points: np.ndarray) -> np.ndarray:
        return self.f_hat(points) + self.g_hat(points)

    @property
    def iterations(self) -> int:
        return len(self.trace)


def zero_member(descriptor: str = "linear") -> FunctionClassMember:
    def evaluator(points):
        points = np.asarray(points, dtype=float)
        m = points.shape[0] if points.ndim > 1 else points.size
        return np.zeros(m)
    return FunctionClassMember(descriptor, evaluator, 0.0, coefficients=None)
