"""Energy bounds for spherical designs of given dimension and cardinality.

For strength tau and cardinality M in [D(n,tau), D(n,tau+1)) the package
computes the universal lower bound (quadrature values of h) and the
Hermite-interpolation upper bound M(g_0 M - g(1)), together with its two
algebraically equal representations, the explicit tau = 2 closed form,
the degree-3 comparison bound for tau = 4, and the asymptotic strip for
2-designs.  Empirical energies and design strengths of explicit point
sets close the loop for exactness tests.

Every emitted upper bound is certified: the D1 margin max(h - g) on
[-1, u] is measured on a dense grid and a violation is a hard error,
never a silently degraded bound.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._core import kernels
from .cardbounds import classify, dgs_bound
from .errors import (
    BoundConstructionError,
    DegenerateConfigurationError,
    InvalidCardinalityError,
    NumericalInconsistencyError,
    UserInputRequiredError,
)
from .errors import AbsoluteMonotonicityWarning
from .hermite import D1_GRID_POINTS, D1_TOL, build_g, check_D1, interpolation_nodes
from .orthopoly import Polynomial, f0_coefficient
from .potentials import Potential, abs_monotone_probe
from .quadrature import QuadratureRule, dgs_rule, rule_for

REPORT_SCHEMA = "spherebounds.report/1"

_PROBE_GRID = np.linspace(-1.0, 0.99, 40)


def _check_strength(n: int, M: float, tau: int) -> None:
    got = classify(n, M).tau
    if got != tau:
        raise InvalidCardinalityError(
            f"M={M} lies in the strength-{got} interval of dimension {n}, not {tau}"
        )


def _probe(h: Potential, tau: int) -> tuple[bool, object]:
    order = int(min(tau + 1, h.max_derivative_order))
    return abs_monotone_probe(h, order, _PROBE_GRID)


def ulb(n: int, M: float, tau: int, h: Potential) -> float:
    """Universal lower bound: M^2 * sum_i w_i h(node_i) over the 1/M rule.

    A failed absolute-monotonicity probe only warns; the value is still
    returned (it is simply no longer guaranteed to bound anything).
    """
    _check_strength(n, M, tau)
    ok, viol = _probe(h, tau)
    if not ok:
        warnings.warn(
            f"{h.description} failed the absolute-monotonicity probe at {viol}; "
            "the lower bound is not certified",
            AbsoluteMonotonicityWarning,
            stacklevel=2,
        )
    rule = rule_for(n, M)
    return M * M * float(rule.weights @ h(rule.nodes))


def _certified_g(n, M, tau, h, u, grid_points, d1_tol=D1_TOL):
    """Interpolant plus its D1 margin; raises if the margin fails."""
    g = build_g(n, tau, u, h)
    nodes = [t for t, _ in interpolation_nodes(n, tau, u)]
    d1 = check_D1(g, h, u, grid_points, nodes=nodes)
    if d1 > d1_tol:
        raise BoundConstructionError(
            f"D1 violated on [-1, {u}]: max(h - g) = {d1:.3e} > {d1_tol}"
        )
    return g, d1


def ub_main(n: int, M: float, tau: int, h: Potential, u: float,
            grid_points: int = D1_GRID_POINTS) -> float:
    """Upper bound M(g_0 M - g(1)) with g tangent to h at the scheme nodes."""
    _check_strength(n, M, tau)
    g, _ = _certified_g(n, M, tau, h, u, grid_points)
    return M * (f0_coefficient(g, n) * M - g(1.0))


def ub_repr_dgs(n: int, M: float, tau: int, h: Potential, u: float,
                grid_points: int = D1_GRID_POINTS) -> float:
    """Same bound written through the rule at the boundary cardinality D(n,tau).

    M^2 [ g_0 (1 - D/M) + (D/M) sum_i w_i h(node_i) ] over dgs_rule(n, tau);
    equals ub_main because that rule's nodes are the interpolation nodes.
    """
    _check_strength(n, M, tau)
    g, _ = _certified_g(n, M, tau, h, u, grid_points)
    d = float(dgs_bound(n, tau))
    rule = dgs_rule(n, tau)
    quad = float(rule.weights @ h(rule.nodes))
    return M * M * (f0_coefficient(g, n) * (1.0 - d / M) + (d / M) * quad)


def ub_repr_ulb(n: int, M: float, tau: int, h: Potential, u: float,
                grid_points: int = D1_GRID_POINTS) -> float:
    """Same bound as ULB plus the nonnegative correction M^2 sum w_i (g - h)(node_i)."""
    _check_strength(n, M, tau)
    g, _ = _certified_g(n, M, tau, h, u, grid_points)
    rule = rule_for(n, M)
    corr = float(rule.weights @ (g(rule.nodes) - h(rule.nodes)))
    return ulb(n, M, tau, h) + M * M * corr


def u_upper(n: int, M: float, tau: int) -> float:
    """Closed-form upper bound on the maximal inner product of a tau-design.

    Only tau = 2 and tau = 4 have published closed forms; other strengths
    require a user-supplied value.
    """
    if tau == 2:
        if not dgs_bound(n, 2) <= M <= dgs_bound(n, 3):
            raise InvalidCardinalityError(
                f"tau=2 structural bound needs M in [{n + 1}, {2 * n}], got {M}"
            )
        return (M - 2.0) / n - 1.0
    if tau == 4:
        if not dgs_bound(n, 4) <= M <= dgs_bound(n, 5):
            raise InvalidCardinalityError(
                f"tau=4 structural bound needs M in [{n * (n + 3) // 2}, {n * (n + 1)}], got {M}"
            )
        return 2.0 * (3.0 + math.sqrt((n - 1.0) * ((n + 2.0) * M - 3.0 * (n + 3.0)))) / (
            n * (n + 2.0)
        ) - 1.0
    raise UserInputRequiredError(
        f"no structural bound on the maximal inner product for tau={tau}; supply u"
    )


def u_lower(n: int, M: float, tau: int | None = None) -> float:
    """Lower bound on the maximal inner product: the solved parameter s.

    This is the largest quadrature node (alpha_{k-1} or beta_k), which
    dominates the largest adjacent-polynomial root.
    """
    if tau is not None:
        _check_strength(n, M, tau)
    return rule_for(n, M).s


def ell_lower_tau4(n: int, M: float) -> float:
    """Closed-form lower bound on the minimal inner product of a 4-design."""
    _check_strength(n, M, 4)
    val = 1.0 - (2.0 / n) * (1.0 + math.sqrt((n - 1.0) * (M - 2.0) / (n + 2.0)))
    return max(val, -1.0)


def ub2_degree3(n: int, M: float, h: Potential) -> float:
    """Degree-3 comparison upper bound for 4-designs (prior approach).

    Optimal for interpolation at {ell, a_0 doubled, u} but weaker than
    the tangency bound; reproduced for the comparison tables.
    """
    _check_strength(n, M, 4)
    ell = ell_lower_tau4(n, M)
    u = u_upper(n, M, 4)
    denom = n * (1.0 - ell) * (1.0 - u) - M * (1.0 + ell * u * n)
    if abs(denom) < 1e-12 * M:
        raise DegenerateConfigurationError(
            f"a_0 denominator vanishes for (n={n}, M={M})"
        )
    a0 = (M * (ell + u) + n * (1.0 - ell) * (1.0 - u)) / denom
    ha = h(a0)
    lobe_l = (h(ell) - ha) * (
        u * M * (1.0 + n * a0 * a0) + 2.0 * M * a0 + n * (1.0 - u) * (1.0 - a0) ** 2
    ) / (n * (u - ell) * (ell - a0) ** 2)
    lobe_u = (h(u) - ha) * (
        ell * M * (1.0 + n * a0 * a0) + 2.0 * M * a0 + n * (1.0 - ell) * (1.0 - a0) ** 2
    ) / (n * (u - ell) * (u - a0) ** 2)
    return M * ((M - 1.0) * ha + lobe_l - lobe_u)


def explicit_tau2(n: int, M: float, h: Potential) -> float:
    """Closed-form tau = 2 upper bound (double node at -1/n, simple at u).

    Identical to the generic pipeline at u = (M-2)/n - 1; returned as an
    absolute energy.
    """
    if not dgs_bound(n, 2) < M < dgs_bound(n, 3):
        raise InvalidCardinalityError(f"tau=2 closed form needs M in ({n + 1}, {2 * n})")
    u = (M - 2.0) / n - 1.0
    t0 = -1.0 / n
    h0 = h(t0)
    h1 = h.deriv(1, t0)
    du = u - t0
    a = (h(u) - h0 - du * h1) / (du * du)
    per_m2 = (M - 1.0) / M * (h0 + h1 / n + a * (n + 1.0) / (n * n)) - (
        n * h1 + a * (n + 1.0)
    ) / (n * M)
    return M * M * per_m2


def asymptotic_strip(lam: float, M: float, h: Potential) -> tuple[float, float]:
    """Per-M^2 strip for 2-designs with M ~ lam * n, lam in (1, 2)."""
    if not 1.0 < lam < 2.0:
        raise ValueError(f"lambda must lie strictly in (1, 2), got {lam}")
    lower = h(0.0) + (h(1.0 - lam) - lam * h(0.0)) / (M * (lam - 1.0))
    upper = h(0.0) + (h(lam - 1.0) - h(0.0) - 2.0 * (lam - 1.0) * h.deriv(1, 0.0)) / (
        M * (lam - 1.0)
    )
    return lower, upper


@dataclass(frozen=True)
class PointSet:
    """M unit vectors in R^n (rows)."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=np.float64))
        norms = np.linalg.norm(pts, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            raise ValueError("all points must have unit norm (within 1e-12)")
        object.__setattr__(self, "points", pts)

    @property
    def M(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]


def pair_energy(C: PointSet, h: Potential) -> float:
    """Sum of h(<x,y>) over ordered distinct pairs; +inf on coincident points."""
    gram = np.clip(C.points @ C.points.T, -1.0, 1.0)
    vals = np.atleast_2d(h(gram))
    off = ~np.eye(C.M, dtype=bool)
    return float(np.sum(vals[off]))


def design_strength(C: PointSet, max_tau: int, tol: float = 1e-9) -> int:
    """Largest tau <= max_tau with vanishing Gegenbauer pair sums.

    The degree-i pair sum over all ordered pairs (diagonal included) is
    nonnegative and vanishes exactly when the set averages degree-i
    polynomials like the sphere does.
    """
    gram = np.ascontiguousarray(
        np.clip(C.points @ C.points.T, -1.0, 1.0).ravel()
    )
    scale = tol * C.M * C.M
    for i in range(1, max_tau + 1):
        total = float(np.sum(kernels.geg_eval_grid(C.n, i, gram)))
        if total < -scale:
            raise NumericalInconsistencyError(
                f"degree-{i} Gegenbauer pair sum is {total}, below -{scale}"
            )
        if total > scale:
            return i - 1
    return max_tau


@dataclass(frozen=True)
class BoundReport:
    """Everything computed for one (n, M, h): inputs, bounds, diagnostics."""

    n: int
    M: float
    tau: int
    potential: str
    u_used: float | None
    u_provenance: str | None
    ell_used: float | None
    ulb: float
    ub_main: float | None
    ub_repr_dgs: float | None
    ub_repr_ulb: float | None
    ub2_deg3: float | None
    rule: QuadratureRule
    interpolant: Polynomial | None
    d1_violation: float | None
    d1_grid_points: int
    notes: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "n": self.n,
            "M": self.M,
            "tau": self.tau,
            "potential": self.potential,
            "u_used": self.u_used,
            "u_provenance": self.u_provenance,
            "ell_used": self.ell_used,
            "ulb": self.ulb,
            "ub_main": self.ub_main,
            "ub_repr_dgs": self.ub_repr_dgs,
            "ub_repr_ulb": self.ub_repr_ulb,
            "ub2_deg3": self.ub2_deg3,
            "rule": json.loads(self.rule.to_json()),
            "interpolant": None if self.interpolant is None else self.interpolant.coeffs.tolist(),
            "d1_violation": self.d1_violation,
            "d1_grid_points": self.d1_grid_points,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_row(self) -> dict:
        """Flat row (n, M, tau, u, U2, U1, L) for table output."""
        return {
            "n": self.n,
            "M": self.M,
            "tau": self.tau,
            "u": self.u_used,
            "U2": self.ub2_deg3,
            "U1": self.ub_main,
            "L": self.ulb,
        }


def full_report(n: int, M: float, h: Potential, u_override: float | None = None,
                grid_points: int = D1_GRID_POINTS, d1_tol: float = D1_TOL) -> BoundReport:
    """Compute every applicable bound for (n, M, h) with diagnostics.

    u comes from the structural lemmas for tau in {2, 4} unless
    overridden; other strengths require an override.  Tight cardinalities
    (M = D(n, tau)) get the lower bound only, with a note.
    """
    cls = classify(n, M)
    tau = cls.tau
    notes = []
    ok, viol = _probe(h, tau)
    if not ok:
        notes.append(f"absolute-monotonicity probe failed at {viol}; bounds uncertified")
    rule = rule_for(n, M)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AbsoluteMonotonicityWarning)
        lower = ulb(n, M, tau, h)

    if cls.tight:
        notes.append("tight cardinality (M = D(n, tau)): upper bounds not emitted")
        return BoundReport(
            n=n, M=float(M), tau=tau, potential=h.description,
            u_used=None, u_provenance=None, ell_used=None,
            ulb=lower, ub_main=None, ub_repr_dgs=None, ub_repr_ulb=None,
            ub2_deg3=None, rule=rule, interpolant=None, d1_violation=None,
            d1_grid_points=grid_points, notes=tuple(notes),
        )

    if u_override is not None:
        u, provenance = float(u_override), "user"
    else:
        u, provenance = u_upper(n, M, tau), "lemma"

    g, d1 = _certified_g(n, M, tau, h, u, grid_points, d1_tol)
    g0 = f0_coefficient(g, n)
    upper = M * (g0 * M - g(1.0))

    d = float(dgs_bound(n, tau))
    drule = dgs_rule(n, tau)
    upper_dgs = M * M * (g0 * (1.0 - d / M) + (d / M) * float(drule.weights @ h(drule.nodes)))
    upper_ulb = lower + M * M * float(rule.weights @ (g(rule.nodes) - h(rule.nodes)))

    scale = M * M * float(np.max(np.abs(h(rule.nodes))))
    if lower > upper + 1e-8 * scale:
        raise BoundConstructionError(
            f"lower bound {lower} exceeds upper bound {upper} for (n={n}, M={M})"
        )
    ref = max(abs(upper), 1.0)
    if abs(upper - upper_dgs) > 1e-8 * ref or abs(upper - upper_ulb) > 1e-8 * ref:
        raise BoundConstructionError(
            f"bound representations disagree: {upper}, {upper_dgs}, {upper_ulb}"
        )

    ell = ell_lower_tau4(n, M) if tau == 4 else None
    ub2 = ub2_degree3(n, M, h) if tau == 4 else None
    return BoundReport(
        n=n, M=float(M), tau=tau, potential=h.description,
        u_used=u, u_provenance=provenance, ell_used=ell,
        ulb=lower, ub_main=upper, ub_repr_dgs=upper_dgs, ub_repr_ulb=upper_ulb,
        ub2_deg3=ub2, rule=rule, interpolant=g, d1_violation=d1,
        d1_grid_points=grid_points, notes=tuple(notes),
    )
