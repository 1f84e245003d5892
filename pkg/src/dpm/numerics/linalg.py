"""Small dense symmetric linear algebra with explicit jitter handling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["CholeskySolveResult", "cholesky_solve", "sym_eig_small"]

MAX_EIG_DIM = 200


def _require_symmetric(A: np.ndarray, name: str) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"{name} must be square, got shape {A.shape}")
    scale = np.max(np.abs(A)) if A.size else 0.0
    if np.max(np.abs(A - A.T)) > 1e-12 * max(scale, 1e-300):
        raise ValueError(f"{name} must be symmetric")
    return A


@dataclass(frozen=True)
class CholeskySolveResult:
    solution: np.ndarray
    jitter_used: float


def cholesky_solve(A: np.ndarray, B: np.ndarray, jitter: float = 0.0) -> CholeskySolveResult:
    """Solve (A + jitter*I) X = B for symmetric positive definite A.

    If factorization fails the jitter escalates by factors of 10, at most
    three times (starting from a scale-relative floor when jitter is 0),
    and the jitter actually used is reported alongside the solution.
    One step of iterative refinement keeps the residual near machine
    precision even for ill-conditioned systems.
    """
    A = _require_symmetric(A, "A")
    B = np.asarray(B, dtype=float)
    if jitter < 0.0:
        raise ValueError("jitter must be non-negative")
    n = A.shape[0]
    floor = 1e-14 * max(1.0, float(np.max(np.abs(A))) if A.size else 1.0)
    attempts = [jitter]
    step = jitter if jitter > 0.0 else floor
    for _ in range(3):
        attempts.append(step)
        step *= 10.0
    eye = np.eye(n)
    last_error = None
    for j in attempts:
        M = A + j * eye if j > 0.0 else A
        try:
            L = np.linalg.cholesky(M)
        except np.linalg.LinAlgError as exc:
            last_error = exc
            continue
        X = np.linalg.solve(L.T, np.linalg.solve(L, B))
        # one refinement pass against the jittered system
        R = B - M @ X
        X = X + np.linalg.solve(L.T, np.linalg.solve(L, R))
        return CholeskySolveResult(X, j)
    raise np.linalg.LinAlgError(
        f"matrix ({n}x{n}) not positive definite after jitter escalation "
        f"to {attempts[-1]:g}: {last_error}")


def sym_eig_small(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix of dimension <= 200.

    Returns eigenvalues in descending order and the matching orthonormal
    eigenvectors as columns.
    """
    A = _require_symmetric(A, "A")
    if A.shape[0] > MAX_EIG_DIM:
        raise ValueError(f"dimension {A.shape[0]} exceeds limit {MAX_EIG_DIM}")
    values, vectors = np.linalg.eigh(A)
    order = np.argsort(values)[::-1]
    return values[order], vectors[:, order]
