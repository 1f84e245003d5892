"""Projected kernels: the RKHS orthogonal complement of a finite span.

For a base kernel Psi, a basis (e_k) of the interpretable span, and a
quadrature rule with points s_i and weights w_i, the projected kernel is

    Psi_F(x, y) = Psi(x, y) - sum_k e_k(x) m_k(y) - sum_k e_k(y) m_k(x)
                  + sum_{k,l} e_k(x) e_l(y) M_{kl},

with moments m_k(y) = int Psi(s, y) e_k(s) ds and
M_{kl} = int int Psi(s, t) e_k(s) e_l(t) ds dt evaluated under the rule.

The supplied basis is re-orthonormalized under the rule's discrete inner
product (Cholesky-based Gram-Schmidt) before projecting.  That leaves the
projected span unchanged but makes the discrete orthogonality
int Psi_F(., y) e_k identically zero up to rounding for the same rule,
which is the property downstream code relies on.
"""

from __future__ import annotations

import numpy as np

from ..numerics import QuadratureRule
from .matern import MaternSpec, OrthonormalBasis, matern_gram, orthonormal_linear_basis

__all__ = ["ProjectedKernel", "projected_kernel_eval"]


class ProjectedKernel:
    """Matern kernel projected orthogonally to a finite-dimensional span.

    Heavy quadrature-grid quantities (kernel values on the rule's points,
    weighted basis, moment matrix M) are computed once at construction and
    cached; per-call work is one base Gram block plus rank-(p+1) updates.
    """

    def __init__(self, base: MaternSpec, quadrature: QuadratureRule,
                 basis: OrthonormalBasis | None = None):
        if quadrature.dim != base.p:
            raise ValueError(f"quadrature dimension {quadrature.dim} != kernel dimension {base.p}")
        self.base = base
        self.quadrature = quadrature
        self.basis = basis if basis is not None else orthonormal_linear_basis(base.p)

        sq = quadrature.points
        wq = quadrature.weights
        raw = self.basis.evaluate(sq)                      # (m, d) raw basis at rule points
        gram = raw.T @ (wq[:, None] * raw)
        # Cholesky-based Gram-Schmidt: columns of raw @ T are rule-orthonormal
        L = np.linalg.cholesky(gram)
        self._transform = np.linalg.solve(L, np.eye(L.shape[0])).T
        self._rule_points = sq
        self._weighted_basis = wq[:, None] * (raw @ self._transform)   # (m, d)
        psi_qq = matern_gram(base, sq, sq)
        self._moment_matrix = self._weighted_basis.T @ psi_qq @ self._weighted_basis

    def _basis_at(self, points: np.ndarray) -> np.ndarray:
        return self.basis.evaluate(points) @ self._transform

    def _moments_at(self, points: np.ndarray) -> np.ndarray:
        # m_k(y) = int Psi(s, y) e_k(s) ds under the attached rule
        return matern_gram(self.base, points, self._rule_points) @ self._weighted_basis

    def gram(self, A: np.ndarray, B: np.ndarray | None = None) -> np.ndarray:
        """Projected-kernel block between two point sets on [0,1]^p."""
        A = np.asarray(A, dtype=float)
        if A.ndim == 1:
            A = A[:, None]
        B_was_none = B is None
        B = A if B_was_none else np.asarray(B, dtype=float)
        if B.ndim == 1:
            B = B[:, None]
        psi = matern_gram(self.base, A, B)
        ea = self._basis_at(A)
        eb = ea if B_was_none else self._basis_at(B)
        ma = self._moments_at(A)
        mb = ma if B_was_none else self._moments_at(B)
        return psi - ea @ mb.T - ma @ eb.T + ea @ self._moment_matrix @ eb.T

    def orthogonality_residual(self, y: np.ndarray) -> float:
        """max_k |int Psi_F(., y) e_k| under the attached rule."""
        y = np.atleast_2d(np.asarray(y, dtype=float))
        vals = self.gram(self._rule_points, y)             # (m, len(y))
        return float(np.max(np.abs(self._weighted_basis.T @ vals)))


def projected_kernel_eval(pk: ProjectedKernel, x: np.ndarray, y: np.ndarray) -> float:
    """Projected kernel value for one pair of points."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    return float(pk.gram(x[None, :], y[None, :])[0, 0])
