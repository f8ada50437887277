"""Confluent (Hermite) Newton interpolation and the tangency polynomial g.

g interpolates the potential h with doubled nodes at the roots of the
extremal cardinality-bound polynomial and a simple node at u; for
absolutely monotone h the interpolation error h - g keeps one sign on
[-1, u], which is what makes M(g_0 M - g(1)) a certified upper energy
bound.  Verification of that sign condition (D1) is grid-based and a
failure is reported, not repaired.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._core import kernels
from .cardbounds import _cached_roots
from .errors import DerivativeOrderError, InvalidUError
from .orthopoly import Polynomial, gegenbauer_expand
from .potentials import Potential

#: A D1 grid violation above this is a hard failure of the bound.
D1_TOL = 1e-9

#: Grid density used when certifying D1 (config knob, recorded in reports).
D1_GRID_POINTS = 10001


@dataclass(frozen=True)
class InterpolationScheme:
    """Nodes (t, multiplicity) in increasing t order, multiplicity in {1, 2}."""

    nodes: tuple
    target: Potential
    total_conditions: int = field(init=False)

    def __post_init__(self):
        ts = [t for t, _ in self.nodes]
        if sorted(ts) != ts or len(set(ts)) != len(ts):
            raise ValueError("nodes must be strictly increasing")
        for t, m in self.nodes:
            if m not in (1, 2):
                raise ValueError(f"multiplicity must be 1 or 2, got {m} at t={t}")
            if m == 2 and not -1.0 < t < 1.0:
                raise ValueError(f"doubled node {t} must be interior")
        object.__setattr__(
            self, "total_conditions", sum(m for _, m in self.nodes)
        )


def confluent_newton(scheme: InterpolationScheme) -> Polynomial:
    """Unique polynomial of degree < total_conditions matching the scheme.

    Divided differences with repeated arguments; doubled nodes consume
    the target's first derivative.  The Newton form is then expanded to
    monomial coefficients (degrees here are small enough for that to be
    benign).
    """
    h = scheme.target
    if any(m == 2 for _, m in scheme.nodes) and h.max_derivative_order < 1:
        raise DerivativeOrderError(
            f"{h.description} has no first derivative; confluent nodes need one"
        )
    z: list[float] = []
    for t, m in scheme.nodes:
        z.extend([t] * m)
    col = [float(h(t)) for t in z]
    coefs = [col[0]]
    for j in range(1, len(z)):
        nxt = []
        for i in range(len(z) - j):
            if z[i + j] == z[i]:
                nxt.append(float(h.deriv(1, z[i])))
            else:
                nxt.append((col[i + 1] - col[i]) / (z[i + j] - z[i]))
        coefs.append(nxt[0])
        col = nxt
    poly = np.array([coefs[-1]])
    for j in range(len(z) - 2, -1, -1):
        poly = np.convolve(poly, np.array([-z[j], 1.0]))
        poly[0] += coefs[j]
    return Polynomial(poly)


def interpolation_nodes(n: int, tau: int, u: float) -> list[tuple[float, int]]:
    """Node layout for the strength-tau tangency construction.

    Odd tau = 2k-1: -1 simple, roots of P_{k-1}^{1,1} doubled, u simple.
    Even tau = 2k: roots of P_k^{1,0} doubled, u simple.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    k = (tau + 1) // 2
    if tau % 2:
        doubled = list(_cached_roots(n, 1, 1, k - 1)) if k >= 2 else []
        nodes = [(-1.0, 1)] + [(t, 2) for t in doubled]
    else:
        doubled = list(_cached_roots(n, 1, 0, k))
        nodes = [(t, 2) for t in doubled]
    top = max(t for t, _ in nodes)
    if not top < u < 1.0:
        raise InvalidUError(
            f"u must lie strictly between the largest interpolation node "
            f"{top} and 1, got {u}"
        )
    return nodes + [(u, 1)]


def build_g(n: int, tau: int, u: float, h: Potential) -> Polynomial:
    """The degree <= tau interpolant of h used by the upper energy bound."""
    scheme = InterpolationScheme(
        nodes=tuple(interpolation_nodes(n, tau, u)), target=h
    )
    return confluent_newton(scheme)


def check_D1(g: Polynomial, h: Potential, u: float,
              grid_points: int = D1_GRID_POINTS, nodes=()) -> float:
    """Max of h - g on [-1, u]: the D1 margin (passes iff <= D1_TOL).

    Evaluates on a Chebyshev-spaced grid plus any supplied nodes and the
    midpoints between consecutive distinguished points.
    """
    if grid_points < 1001:
        raise ValueError("grid_points must be >= 1001")
    cheb = np.cos(np.pi * np.arange(grid_points) / (grid_points - 1))
    ts = 0.5 * (u - 1.0) + 0.5 * (u + 1.0) * cheb
    marks = np.unique(np.array([-1.0, *nodes, u]))
    if marks.size > 1:
        mids = 0.5 * (marks[1:] + marks[:-1])
        ts = np.concatenate([ts, marks, mids])
    ts = np.ascontiguousarray(np.clip(ts, -1.0, u))
    return float(np.max(h(ts) - kernels.horner_grid(g.coeffs, ts)))


def check_D2(g: Polynomial, n: int, tau: int) -> bool:
    """True iff the Gegenbauer coefficients of g vanish above degree tau.

    Trivially true for the build_g output (deg g <= tau); kept as an
    explicit guard for externally supplied polynomials.
    """
    if g.degree <= tau:
        return True
    coeffs = gegenbauer_expand(g, n).coeffs
    return all(c <= 1e-12 for c in coeffs[tau + 1 :])
