"""Potential functions h(t) with exact derivative oracles.

The energy bounds assume h is absolutely monotone on [-1, 1): every
derivative nonnegative.  The catalog covers the Riesz family (which
includes the Newtonian case) and exact polynomial potentials; custom
potentials must bring their own derivative oracle, otherwise Hermite
interpolation is refused rather than falling back to finite
differences.  For the lowest strengths fewer derivative orders would
suffice (tau = 2 needs only the first three), but the probe checks
orders up to tau + 1 uniformly.

h(1) may be +inf; the bound formulas only ever evaluate interpolants at
t = 1, never h itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DerivativeOrderError
from .orthopoly import Polynomial


@dataclass(frozen=True)
class Potential:
    """Immutable evaluator for h and its derivatives.

    ``eval_fn`` and ``deriv_fn`` accept scalars or numpy arrays.
    ``max_derivative_order`` is math.inf when every order is available.
    """

    description: str
    eval_fn: Callable = field(repr=False)
    deriv_fn: Callable = field(repr=False)
    max_derivative_order: float = math.inf

    def __call__(self, t):
        return self.eval_fn(t)

    def deriv(self, k: int, t):
        if k == 0:
            return self.eval_fn(t)
        if k > self.max_derivative_order:
            raise DerivativeOrderError(
                f"{self.description} supports derivatives up to order "
                f"{self.max_derivative_order}, requested {k}"
            )
        return self.deriv_fn(k, t)


def riesz(s_exponent: float) -> Potential:
    """Riesz potential h(t) = (2(1-t))**(-s); h(1) = +inf."""
    if s_exponent <= 0:
        raise ValueError("Riesz exponent must be positive")
    s = float(s_exponent)

    def _eval(t):
        x = 2.0 * (1.0 - np.asarray(t, dtype=np.float64))
        with np.errstate(divide="ignore"):
            out = x**-s
        return float(out) if np.ndim(t) == 0 else out

    def _deriv(k, t):
        # h^(k)(t) = 2^-s * s(s+1)...(s+k-1) * (1-t)^(-s-k)
        rising = math.prod(s + j for j in range(k))
        x = 1.0 - np.asarray(t, dtype=np.float64)
        with np.errstate(divide="ignore"):
            out = 2.0**-s * rising * x ** (-s - k)
        return float(out) if np.ndim(t) == 0 else out

    return Potential(description=f"riesz:{s:g}", eval_fn=_eval, deriv_fn=_deriv)


def newtonian(n: int) -> Potential:
    """Newton potential for dimension n: the Riesz exponent (n-2)/2."""
    if n < 3:
        raise ValueError("dimension must be >= 3")
    base = riesz((n - 2) / 2.0)
    return Potential(
        description=f"newton(n={n})",
        eval_fn=base.eval_fn,
        deriv_fn=base.deriv_fn,
    )


def polynomial_potential(p: Polynomial) -> Potential:
    """A polynomial as potential, with exact coefficient-wise derivatives."""
    derivs = [p]

    def _deriv(k, t):
        while len(derivs) <= k:
            derivs.append(derivs[-1].deriv())
        return derivs[k](t)

    return Potential(
        description=f"poly:{','.join(f'{c:g}' for c in p.coeffs)}",
        eval_fn=p.__call__,
        deriv_fn=_deriv,
    )


def abs_monotone_probe(h: Potential, max_order: int, grid):
    """Check h^(k) >= -1e-12 for k <= max_order on a grid in [-1, 1).

    Returns (True, None) or (False, (k, t, value)) with the first
    violation found.
    """
    grid = np.asarray(grid, dtype=np.float64)
    for k in range(max_order + 1):
        vals = np.atleast_1d(h.deriv(k, grid))
        bad = np.nonzero(vals < -1e-12)[0]
        if bad.size:
            j = bad[0]
            return False, (k, float(grid[j]), float(vals[j]))
    return True, None


def parse_potential(text: str, n: int | None = None) -> Potential:
    """CLI potential syntax: "riesz:<s>", "newton", "poly:<c0,c1,...>"."""
    if text == "newton":
        if n is None:
            raise ValueError("'newton' needs the dimension from context")
        return newtonian(n)
    if text.startswith("riesz:"):
        return riesz(float(text[len("riesz:"):]))
    if text.startswith("poly:"):
        coeffs = [float(c) for c in text[len("poly:"):].split(",")]
        return polynomial_potential(Polynomial(coeffs))
    raise ValueError(f"unrecognized potential spec {text!r}")
