"""Isotropic Matern kernels on the unit cube.

The kernel with Sobolev smoothness nu in dimension p is

    Psi(s, t) = z^mu K_mu(z) / (Gamma(mu) 2^(mu-1)),   z = 2 sqrt(mu) phi ||s-t||,

with mu = nu - p/2 > 0 and K_mu the modified Bessel function of the
second kind.  Psi(s, s) = 1 by the small-argument limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..numerics import bessel_k

__all__ = ["MaternSpec", "OrthonormalBasis", "matern_eval", "matern_gram",
           "orthonormal_linear_basis"]


@dataclass(frozen=True)
class MaternSpec:
    """Matern kernel parameters: smoothness nu > p/2, dimension p, range phi."""

    nu: float
    p: int
    phi: float

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("dimension p must be at least 1")
        if not self.mu > 0.0:
            raise ValueError(f"need nu > p/2, got nu={self.nu}, p={self.p}")
        if not self.phi > 0.0:
            raise ValueError("phi must be positive")

    @property
    def mu(self) -> float:
        return self.nu - self.p / 2.0


def matern_of_distance(spec: MaternSpec, r: np.ndarray) -> np.ndarray:
    """Kernel value as a function of Euclidean distance (vectorized)."""
    r = np.asarray(r, dtype=float)
    mu = spec.mu
    z = 2.0 * math.sqrt(mu) * spec.phi * r
    out = np.ones_like(z)
    pos = z > 0.0
    if np.any(pos):
        zp = z[pos]
        with np.errstate(over="ignore", invalid="ignore"):
            vals = zp ** mu * bessel_k(mu, zp) / (math.gamma(mu) * 2.0 ** (mu - 1.0))
        # saturated Bessel values at z -> 0 resolve to the limit 1
        out[pos] = np.where(np.isfinite(vals), np.clip(vals, 0.0, 1.0), 1.0)
    return out


def matern_eval(spec: MaternSpec, s: np.ndarray, t: np.ndarray) -> float:
    """Kernel value for a single pair of points."""
    s = np.atleast_1d(np.asarray(s, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if s.shape != t.shape or s.size != spec.p:
        raise ValueError(f"points must both have dimension {spec.p}")
    r = float(np.sqrt(np.sum((s - t) ** 2)))
    return float(matern_of_distance(spec, np.array(r)))


def matern_gram(spec: MaternSpec, A: np.ndarray, B: np.ndarray | None = None) -> np.ndarray:
    """Kernel matrix between two point sets (rows are points)."""
    A = np.asarray(A, dtype=float)
    if A.ndim == 1:
        A = A[:, None]
    if B is None:
        B = A
    else:
        B = np.asarray(B, dtype=float)
        if B.ndim == 1:
            B = B[:, None]
    d = np.sqrt(((A[:, None, :] - B[None, :, :]) ** 2).sum(-1))
    return matern_of_distance(spec, d)


@dataclass(frozen=True)
class OrthonormalBasis:
    """Functions e_0..e_p on [0,1]^p, orthonormal under the uniform measure."""

    functions: tuple[Callable[[np.ndarray], np.ndarray], ...]
    p: int

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        return np.column_stack([f(pts) for f in self.functions])

    def __len__(self) -> int:
        return len(self.functions)


def orthonormal_linear_basis(p: int) -> OrthonormalBasis:
    """Constant-plus-linear orthonormal basis on [0,1]^p.

    e_0(x) = 1 and e_j(x) = sqrt(12) (x_j - 1/2): mean zero and variance
    1/12 of a uniform coordinate make these orthonormal in L2([0,1]^p).
    """
    if p < 1:
        raise ValueError("dimension must be at least 1")
    funcs = [lambda pts: np.ones(pts.shape[0])]
    sqrt12 = math.sqrt(12.0)
    for j in range(p):
        funcs.append(lambda pts, _j=j: sqrt12 * (pts[:, _j] - 0.5))
    return OrthonormalBasis(tuple(funcs), p)
