"""Benchmark test functions for the simulation studies."""

from __future__ import annotations

import re

import numpy as np


def gramacy1d(x: np.ndarray) -> np.ndarray:
    """sin(10 pi x) / (2x) + (x - 1)^4 on [0.5, 2.5]."""
    x = np.asarray(x, dtype=float)
    return np.sin(10.0 * np.pi * x) / (2.0 * x) + (x - 1.0) ** 4


def sun5d(X: np.ndarray) -> np.ndarray:
    """2/(||x-0.5||+1) + 0.5/(||x-0.7||+1) on [0,1]^5."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    d1 = np.sqrt(np.sum((X - 0.5) ** 2, axis=1))
    d2 = np.sqrt(np.sum((X - 0.7) ** 2, axis=1))
    return 2.0 / (d1 + 1.0) + 0.5 / (d2 + 1.0)


def sine_linear(theta: float, beta1: float, beta2: float, x: np.ndarray) -> np.ndarray:
    """beta1 * x + beta2 * sin(theta x) on [0,1]."""
    x = np.asarray(x, dtype=float)
    return beta1 * x + beta2 * np.sin(theta * x)


_SINE_LINEAR_RE = re.compile(r"^sine-linear\(([^,]+),([^,]+),([^)]+)\)$")


def test_function_eval(name: str, x) -> float:
    """Evaluate a named test function at one point.

    ``name`` is ``gramacy1d``, ``sun5d``, or ``sine-linear(theta,b1,b2)``.
    Points outside the function's domain raise ValueError.
    """
    if name == "gramacy1d":
        xv = float(np.asarray(x, dtype=float).reshape(()))
        if not 0.5 <= xv <= 2.5:
            raise ValueError(f"gramacy1d domain is [0.5, 2.5], got {xv}")
        return float(gramacy1d(np.array(xv)))
    if name == "sun5d":
        pt = np.asarray(x, dtype=float).ravel()
        if pt.size != 5 or np.any(pt < 0.0) or np.any(pt > 1.0):
            raise ValueError("sun5d domain is [0,1]^5")
        return float(sun5d(pt[None, :])[0])
    match = _SINE_LINEAR_RE.match(name.replace(" ", ""))
    if match:
        theta, b1, b2 = (float(g) for g in match.groups())
        xv = float(np.asarray(x, dtype=float).reshape(()))
        if not 0.0 <= xv <= 1.0:
            raise ValueError(f"sine-linear domain is [0,1], got {xv}")
        return float(sine_linear(theta, b1, b2, np.array(xv)))
    raise ValueError(f"unknown test function {name!r}")
