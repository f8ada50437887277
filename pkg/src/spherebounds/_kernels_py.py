"""Pure-Python/numpy twin of the compiled ``_kernels`` extension.

Kept in lockstep with ``_kernels.pyx``: same function names, same
semantics, so either module can back ``_core.kernels``.  Scalar
functions run plain Python loops; grid functions vectorize the same
recurrences over numpy arrays.
"""

import numpy as np

BACKEND = "python"


def geg_eval(n: int, i: int, t: float) -> float:
    """Normalized Gegenbauer value P_i(t) for dimension n (P_i(1) = 1)."""
    if i == 0:
        return 1.0
    if i == 1:
        return t
    pm1, p = 1.0, t
    for j in range(1, i):
        pm1, p = p, ((2 * j + n - 2) * t * p - j * pm1) / (j + n - 2)
    return p


def geg_eval_grid(n: int, i: int, ts: np.ndarray) -> np.ndarray:
    """Vectorized ``geg_eval`` over an array of points."""
    ts = np.asarray(ts, dtype=np.float64)
    if i == 0:
        return np.ones_like(ts)
    if i == 1:
        return ts.copy()
    pm1, p = np.ones_like(ts), ts
    for j in range(1, i):
        pm1, p = p, ((2 * j + n - 2) * ts * p - j * pm1) / (j + n - 2)
    return p


def jac_eval(a: float, b: float, i: int, t: float) -> float:
    """Standard (unnormalized) Jacobi value P_i^(a,b)(t)."""
    if i == 0:
        return 1.0
    pm1 = 1.0
    p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * t
    for j in range(2, i + 1):
        s = 2.0 * j + a + b
        c1 = 2.0 * j * (j + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * s
        pm1, p = p, ((c2 + c3 * t) * p - c4 * pm1) / c1
    return p


def jac_eval_grid(a: float, b: float, i: int, ts: np.ndarray) -> np.ndarray:
    """Vectorized ``jac_eval`` over an array of points."""
    ts = np.asarray(ts, dtype=np.float64)
    if i == 0:
        return np.ones_like(ts)
    pm1 = np.ones_like(ts)
    p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * ts
    for j in range(2, i + 1):
        s = 2.0 * j + a + b
        c1 = 2.0 * j * (j + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * s
        pm1, p = p, ((c2 + c3 * ts) * p - c4 * pm1) / c1
    return p


def jac_pair(a: float, b: float, k: int, t: float) -> tuple[float, float]:
    """(P_{k-1}, P_k) for the standard Jacobi family."""
    if k == 0:
        return 0.0, 1.0
    return jac_eval(a, b, k - 1, t), jac_eval(a, b, k, t)


def horner(coeffs: np.ndarray, t: float) -> float:
    """Evaluate a monomial-coefficient polynomial (coeffs[j] multiplies t**j)."""
    acc = 0.0
    for c in coeffs[::-1]:
        acc = acc * t + c
    return acc


def horner_grid(coeffs: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """Vectorized ``horner`` over an array of points."""
    ts = np.asarray(ts, dtype=np.float64)
    acc = np.zeros_like(ts)
    for c in np.asarray(coeffs)[::-1]:
        acc = acc * ts + c
    return acc
