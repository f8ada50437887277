"""Cardinality machinery: Fisher-type design bounds and Levenshtein code bounds.

D(n, tau) is the classical lower bound on the size of a strength-tau
design; L_tau(n, s) bounds the size of a code with maximal inner
product s, piecewise over branch intervals delimited by the largest
roots of the adjacent polynomials.  The two meet at the interval
endpoints, which is the main correctness anchor for everything here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ._rootfind import bracketed_root
from .errors import BranchDomainError, ConvergenceError, InvalidCardinalityError
from .orthopoly import (
    JacobiSpec,
    Polynomial,
    adjacent_polynomial,
    adjacent_roots,
    f0_coefficient,
    gegenbauer_eval,
)

#: Slack used when testing membership of s in a closed branch interval.
_EDGE_TOL = 1e-12


def dgs_bound(n: int, tau: int) -> int:
    """D(n, tau), exact integer (Python ints do not overflow)."""
    if n < 3 or tau < 1:
        raise ValueError(f"need n >= 3 and tau >= 1, got ({n}, {tau})")
    k = (tau + 1) // 2
    if tau % 2:
        return 2 * math.comb(n + k - 2, n - 1)
    return math.comb(n + k - 1, n - 1) + math.comb(n + k - 2, n - 1)


@dataclass(frozen=True)
class StrengthClassification:
    """Strength interval containing a cardinality: D(n, tau) <= M < D(n, tau+1)."""

    n: int
    M: float
    tau: int
    tight: bool


def classify(n: int, M: float) -> StrengthClassification:
    """Locate M in the ladder of D(n, tau) values."""
    if M < dgs_bound(n, 1):
        raise InvalidCardinalityError(f"M={M} is below D({n},1)={dgs_bound(n, 1)}")
    tau = 1
    while dgs_bound(n, tau + 1) <= M:
        tau += 1
    return StrengthClassification(n=n, M=M, tau=tau, tight=(M == dgs_bound(n, tau)))


def dgs_polynomial(n: int, tau: int) -> Polynomial:
    """The extremal polynomial behind D(n, tau), in monomial form.

    (t+1) * P_{k-1}^{1,1}(t)^2 for tau = 2k-1, P_k^{1,0}(t)^2 for tau = 2k.
    """
    k = (tau + 1) // 2
    if tau % 2:
        q = adjacent_polynomial(JacobiSpec(n, 1, 1), k - 1)
        return Polynomial([1.0, 1.0]) * q * q
    q = adjacent_polynomial(JacobiSpec(n, 1, 0), k)
    return q * q


def lp_cardinality_check(n: int, tau: int) -> float:
    """d_tau(1) / f0(d_tau): must reproduce dgs_bound(n, tau).

    End-to-end cross-check of the expansion and moment machinery against
    the exact binomial formula.
    """
    d = dgs_polynomial(n, tau)
    return d(1.0) / f0_coefficient(d, n)


@lru_cache(maxsize=None)
def _cached_roots(n: int, a: int, b: int, i: int) -> tuple[float, ...]:
    return tuple(adjacent_roots(JacobiSpec(n, a, b), i))


def _largest_root(n: int, a: int, b: int, i: int) -> float:
    return _cached_roots(n, a, b, i)[-1]


@lru_cache(maxsize=None)
def levenshtein_interval(n: int, tau: int) -> tuple[float, float]:
    """Branch interval of L_tau(n, .).

    Odd tau = 2k-1: [largest root of P_{k-1}^{1,1}, largest root of P_k^{1,0}],
    with the k = 1 left end taken as -1 (the degree-0 polynomial has no
    root; -1 matches the classical simplex-bound domain).
    Even tau = 2k: [largest root of P_k^{1,0}, largest root of P_k^{1,1}].
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    k = (tau + 1) // 2
    if tau % 2:
        lo = -1.0 if k == 1 else _largest_root(n, 1, 1, k - 1)
        return lo, _largest_root(n, 1, 0, k)
    return _largest_root(n, 1, 0, k), _largest_root(n, 1, 1, k)


def levenshtein_bound(n: int, tau: int, s: float) -> float:
    """L_tau(n, s) on its branch interval."""
    lo, hi = levenshtein_interval(n, tau)
    if not (lo - _EDGE_TOL <= s <= hi + _EDGE_TOL):
        raise BranchDomainError(
            f"s={s} outside the L_{tau}({n}, .) branch interval [{lo}, {hi}]"
        )
    k = (tau + 1) // 2
    if tau % 2:
        pk = gegenbauer_eval(n, k, s)
        pkm1 = gegenbauer_eval(n, k - 1, s)
        return math.comb(k + n - 3, k - 1) * (
            (2 * k + n - 3) / (n - 1) - (pkm1 - pk) / ((1.0 - s) * pk)
        )
    pk = gegenbauer_eval(n, k, s)
    pkp1 = gegenbauer_eval(n, k + 1, s)
    return math.comb(k + n - 2, k) * (
        (2 * k + n - 1) / (n - 1)
        - (1.0 + s) * (pk - pkp1) / ((1.0 - s) * (pk + pkp1))
    )


def solve_s_for_cardinality(n: int, M: float) -> tuple[int, float]:
    """Invert M = L_tau(n, s) for the strength interval containing M.

    L_tau(n, .) is strictly increasing on its branch, so bisection on the
    branch interval is well posed.  Ties at a branch endpoint (M equal to
    a D value) return the endpoint exactly.
    """
    cls = classify(n, M)
    tau = cls.tau
    lo, hi = levenshtein_interval(n, tau)
    if cls.tight:
        return tau, lo
    s = bracketed_root(
        lambda s: levenshtein_bound(n, tau, s) - M, lo, hi, width=1e-16
    )
    if abs(levenshtein_bound(n, tau, s) - M) > 1e-12 * M:
        raise ConvergenceError(
            f"L_{tau}({n}, s) = {M} did not converge (s={s}); "
            "the bound may not be monotone here"
        )
    return tau, s
