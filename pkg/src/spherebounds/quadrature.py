"""The 1/M-quadrature rule: f_0 = f(1)/M + sum_i w_i f(node_i).

For each admissible cardinality M the rule is unique: its largest node
is the solved parameter s with L_tau(n, s) = M, the remaining nodes are
the other roots of P_k(t) P_{k-1}(s) = P_k(s) P_{k-1}(t) in the branch
family ((1,0) for odd tau, (1,1) for even, which additionally carries a
node at -1), and the weights make the rule exact through degree tau.
Positivity and exactness are verified at construction and failures are
hard errors: the underlying theorem guarantees both when the nodes are
right, so a violation always means a bug upstream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._rootfind import bracketed_root
from .cardbounds import _cached_roots, classify, dgs_bound, solve_s_for_cardinality
from .errors import InvalidCardinalityError, RuleConstructionError
from .orthopoly import JacobiSpec, adjacent_deriv, adjacent_eval, weight_moments

SCHEMA = "spherebounds.quadrature/1"

#: Exactness verification tolerance (absolute, monomial test functions).
EXACTNESS_TOL = 1e-10


@dataclass(frozen=True)
class QuadratureRule:
    """Immutable nodes/weights record for one (n, M)."""

    n: int
    M: float
    tau: int
    s: float
    nodes: np.ndarray
    weights: np.ndarray
    endpoint_mass: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": SCHEMA,
                "n": self.n,
                "M": self.M,
                "tau": self.tau,
                "s": self.s,
                "nodes": self.nodes.tolist(),
                "weights": self.weights.tolist(),
                "endpoint_mass": self.endpoint_mass,
            }
        )

    @staticmethod
    def from_json(text: str) -> "QuadratureRule":
        d = json.loads(text)
        return QuadratureRule(
            n=d["n"],
            M=d["M"],
            tau=d["tau"],
            s=d["s"],
            nodes=np.array(d["nodes"]),
            weights=np.array(d["weights"]),
            endpoint_mass=d["endpoint_mass"],
        )


def apply_rule(rule: QuadratureRule, values, value_at_one: float) -> float:
    """Apply the rule to function values sampled at the nodes and at 1."""
    values = np.asarray(values, dtype=np.float64)
    if values.shape != rule.nodes.shape:
        raise ValueError(f"expected {rule.nodes.size} node values, got {values.size}")
    return rule.endpoint_mass * float(value_at_one) + float(rule.weights @ values)


def _lagrange_weights(n: int, M: float, nodes: np.ndarray) -> np.ndarray:
    # w_j = f0(l_j) - l_j(1)/M on the Lagrange basis of the node set: the
    # exactness system is diagonal there, no Vandermonde solve involved.
    moments = weight_moments(n, len(nodes) - 1)
    ws = np.empty(len(nodes))
    for j, xj in enumerate(nodes):
        others = np.delete(nodes, j)
        coeffs = np.array([1.0])
        denom = 1.0
        for r in others:
            coeffs = np.convolve(coeffs, np.array([-r, 1.0]))
            denom *= xj - r
        f0 = float(sum(Fraction(float(c)) * moments[p] for p, c in enumerate(coeffs) if c))
        at_one = float(np.sum(coeffs))
        ws[j] = (f0 - at_one / M) / denom
    return ws


def _verify_rule(rule: QuadratureRule) -> None:
    if np.any(rule.weights <= 0.0):
        raise RuleConstructionError(
            f"nonpositive weight in rule for (n={rule.n}, M={rule.M}): {rule.weights}"
        )
    moments = weight_moments(rule.n, rule.tau)
    for j in range(rule.tau + 1):
        got = apply_rule(rule, rule.nodes**j, 1.0)
        if abs(got - float(moments[j])) > EXACTNESS_TOL:
            raise RuleConstructionError(
                f"rule for (n={rule.n}, M={rule.M}) not exact on t^{j}: "
                f"{got} vs {float(moments[j])}"
            )


def _equation_nodes(spec: JacobiSpec, k: int, s: float) -> list[float]:
    """The k-1 roots below s of P_k(t)P_{k-1}(s) = P_k(s)P_{k-1}(t).

    Brackets come from the interlacing of the roots x of P_k and y of
    P_{k-1}: the lowest unknown root lies in (-1, x_1), the m-th in
    (y_{m-1}, x_m); the k-th root is s itself.
    """
    pk_s = adjacent_eval(spec, k, s)
    pkm1_s = adjacent_eval(spec, k - 1, s)

    def q(t: float) -> float:
        return adjacent_eval(spec, k, t) * pkm1_s - pk_s * adjacent_eval(spec, k - 1, t)

    def dq(t: float) -> float:
        return adjacent_deriv(spec, k, t) * pkm1_s - pk_s * adjacent_deriv(spec, k - 1, t)

    x = _cached_roots(spec.n, spec.a, spec.b, k)
    y = _cached_roots(spec.n, spec.a, spec.b, k - 1) if k >= 2 else ()
    out = []
    for m in range(1, k):
        lo = -1.0 if m == 1 else y[m - 2]
        out.append(bracketed_root(q, lo, x[m - 1], df=dq))
    return out


def node_equation_residual(rule: QuadratureRule) -> float:
    """Max |P_k(node)P_{k-1}(s) - P_k(s)P_{k-1}(node)| over interior nodes."""
    k = (rule.tau + 1) // 2
    spec = JacobiSpec(rule.n, 1, 0) if rule.tau % 2 else JacobiSpec(rule.n, 1, 1)
    pk_s = adjacent_eval(spec, k, rule.s)
    pkm1_s = adjacent_eval(spec, k - 1, rule.s)
    worst = 0.0
    for t in rule.nodes:
        if t == -1.0:
            continue
        r = adjacent_eval(spec, k, t) * pkm1_s - pk_s * adjacent_eval(spec, k - 1, t)
        worst = max(worst, abs(r))
    return worst


def rule_for(n: int, M: float) -> QuadratureRule:
    """Construct the 1/M-quadrature rule for any M >= D(n, 2).

    M may be any real in [D(n, tau), D(n, tau+1)); at the left endpoint
    this degenerates to dgs_rule(n, tau).
    """
    cls = classify(n, M)
    if cls.tau < 2:
        raise InvalidCardinalityError(f"M={M} is below D({n},2)={dgs_bound(n, 2)}")
    if cls.tight:
        return dgs_rule(n, cls.tau)
    tau, s = solve_s_for_cardinality(n, M)
    k = (tau + 1) // 2
    if tau % 2:
        spec = JacobiSpec(n, 1, 0)
        nodes = np.array(_equation_nodes(spec, k, s) + [s])
    else:
        spec = JacobiSpec(n, 1, 1)
        nodes = np.array([-1.0] + _equation_nodes(spec, k, s) + [s])
    rule = QuadratureRule(
        n=n,
        M=float(M),
        tau=tau,
        s=s,
        nodes=nodes,
        weights=_lagrange_weights(n, M, nodes),
        endpoint_mass=1.0 / M,
    )
    _verify_rule(rule)
    return rule


def dgs_rule(n: int, tau: int) -> QuadratureRule:
    """The rule at the boundary cardinality M = D(n, tau).

    Even tau = 2k: nodes are exactly the roots of P_k^{1,0} (no -1 node,
    its weight would be zero).  Odd tau = 2k-1: -1 together with the
    roots of P_{k-1}^{1,1}.
    """
    if tau < 2:
        raise ValueError("dgs_rule needs tau >= 2")
    k = (tau + 1) // 2
    if tau % 2:
        nodes = np.array([-1.0] + list(_cached_roots(n, 1, 1, k - 1) if k >= 2 else ()))
    else:
        nodes = np.array(_cached_roots(n, 1, 0, k))
    M = float(dgs_bound(n, tau))
    rule = QuadratureRule(
        n=n,
        M=M,
        tau=tau,
        s=float(nodes[-1]),
        nodes=nodes,
        weights=_lagrange_weights(n, M, nodes),
        endpoint_mass=1.0 / M,
    )
    _verify_rule(rule)
    return rule
