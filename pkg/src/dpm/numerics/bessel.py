"""Modified Bessel function of the second kind, self-contained.

Evaluation strategy by order:

* half-integer orders use the closed elementary form
  ``K_{n+1/2}(x) = sqrt(pi/(2x)) e^{-x} sum_k (n+k)! / (k! (n-k)! (2x)^k)``,
* integer orders use ``K_0``, ``K_1`` from the integral representation plus
  the upward recurrence ``K_{n+1}(x) = K_{n-1}(x) + (2n/x) K_n(x)``,
* all other orders use the integral representation
  ``K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt``
  evaluated by composite Gauss-Legendre panels with convergence doubling.

No external special-function dependency.  Values whose magnitude would
overflow float64 saturate at :data:`K_SATURATION` instead of returning
infinity; callers can compare against that constant to detect saturation.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["K_SATURATION", "bessel_k"]

# Flagged saturation value for arguments so small that K_nu overflows.
K_SATURATION = 1e300

_LOG_SATURATION = math.log(K_SATURATION)

# 24-point Gauss-Legendre nodes/weights on [0, 1], used per panel.
_GL_X, _GL_W = np.polynomial.legendre.leggauss(24)
_GL_X = (_GL_X + 1.0) / 2.0
_GL_W = _GL_W / 2.0


def _log_cosh(a: np.ndarray) -> np.ndarray:
    """log(cosh(a)) without overflow for large a."""
    a = np.abs(a)
    small = a < 20.0
    out = a - math.log(2.0) + np.log1p(np.exp(-2.0 * np.clip(a, 20.0, None)))
    if np.any(small):
        out = np.where(small, np.log(np.cosh(np.where(small, a, 0.0))), out)
    return out


def _integral_upper_limit(order: float, xmin: float) -> float:
    """Truncation point T: integrand negligible relative to its peak beyond T."""
    tstar = math.asinh(order / xmin) if order > 0.0 else 0.0
    peak = -xmin * math.cosh(tstar) + float(_log_cosh(np.array(order * tstar)))
    t = tstar + 1.0
    while t < 800.0:
        val = -xmin * math.cosh(t) + float(_log_cosh(np.array(order * t)))
        if val < peak - 45.0 or val < -760.0:
            break
        t += 1.0
    return t


def _integral_on_panels(order: float, x: np.ndarray, n_panels: int, upper: float) -> np.ndarray:
    edges = np.linspace(0.0, upper, n_panels + 1)
    width = edges[1] - edges[0]
    nodes = (edges[:-1, None] + width * _GL_X[None, :]).ravel()
    weights = np.broadcast_to(width * _GL_W, (n_panels, _GL_X.size)).ravel()
    lc = _log_cosh(order * nodes)
    out = np.empty_like(x)
    with np.errstate(over="ignore"):
        cosh_nodes = np.cosh(nodes)
        for start in range(0, x.size, 2048):
            blk = x[start:start + 2048, None]
            expo = -blk * cosh_nodes[None, :] + lc[None, :]
            out[start:start + 2048] = np.exp(expo) @ weights
    return out


def _k_integral(order: float, x: np.ndarray) -> np.ndarray:
    """K_order(x) from the integral representation, adaptively refined."""
    upper = _integral_upper_limit(order, float(np.min(x)))
    n_panels = max(4, int(math.ceil(upper)))
    approx = _integral_on_panels(order, x, n_panels, upper)
    for _ in range(3):
        refined = _integral_on_panels(order, x, 2 * n_panels, upper)
        scale = np.maximum(np.abs(refined), 1e-300)
        if np.max(np.abs(refined - approx) / scale) < 1e-12:
            return refined
        approx, n_panels = refined, 2 * n_panels
    return approx


def _k_half_integer(n: int, x: np.ndarray) -> np.ndarray:
    """K_{n+1/2}(x) closed form, n >= 0."""
    with np.errstate(over="ignore"):
        total = np.zeros_like(x)
        for k in range(n + 1):
            coeff = math.factorial(n + k) / (math.factorial(k) * math.factorial(n - k))
            total += coeff / (2.0 * x) ** k
        return np.sqrt(math.pi / (2.0 * x)) * np.exp(-x) * total


def _k_integer(n: int, x: np.ndarray) -> np.ndarray:
    k_prev = _k_integral(0.0, x)
    if n == 0:
        return k_prev
    k_cur = _k_integral(1.0, x)
    with np.errstate(over="ignore"):
        for j in range(1, n):
            k_prev, k_cur = k_cur, k_prev + (2.0 * j / x) * k_cur
    return k_cur


def _saturates(order: float, x: np.ndarray) -> np.ndarray:
    """Small-argument magnitude estimate; flags entries that overflow float64."""
    if order <= 0.0:
        return np.zeros(x.shape, dtype=bool)
    log_small = math.lgamma(order) - math.log(2.0) + order * (math.log(2.0) - np.log(x))
    return log_small > _LOG_SATURATION


def bessel_k(order: float, x: float | np.ndarray) -> float | np.ndarray:
    """Modified Bessel function of the second kind K_order(x).

    Parameters
    ----------
    order : float
        Non-negative order.
    x : float or ndarray
        Positive argument(s).

    Returns
    -------
    float or ndarray
        K_order at each argument.  Entries that would overflow float64
        are returned as :data:`K_SATURATION`.

    Raises
    ------
    ValueError
        If ``order`` is negative or any argument is not strictly positive.
    """
    if not math.isfinite(order) or order < 0.0:
        raise ValueError(f"order must be a finite non-negative real, got {order!r}")
    scalar = np.isscalar(x) or np.ndim(x) == 0
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if arr.size == 0:
        return arr.reshape(np.shape(x))
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError("x must be strictly positive and finite")

    flat = arr.ravel()
    sat = _saturates(order, flat)
    out = np.full(flat.shape, K_SATURATION)
    live = ~sat
    if np.any(live):
        xs = flat[live]
        two_order = 2.0 * order
        if two_order == round(two_order) and round(two_order) % 2 == 1:
            vals = _k_half_integer(int(round(order - 0.5)), xs)
        elif order == round(order):
            vals = _k_integer(int(round(order)), xs)
        else:
            vals = _k_integral(order, xs)
        vals = np.where(np.isfinite(vals), vals, K_SATURATION)
        out[live] = vals
    out = out.reshape(arr.shape)
    if scalar:
        return float(out[()] if out.ndim == 0 else out[0])
    return out
