"""Gegenbauer and adjacent Jacobi polynomials for a fixed sphere dimension.

Everything is normalized to take the value 1 at t = 1.  The "adjacent"
families shift the Jacobi parameters by a, b in {0, 1} away from the
symmetric Gegenbauer case (a = b = 0); their roots drive quadrature
nodes and interpolation schemes elsewhere in the package.  Notational
convention carried through the package: a single-subscript root symbol
always means the largest root of the polynomial.

All operations are pure functions and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._core import kernels
from ._rootfind import bracketed_root
from .errors import UnsupportedDegreeError

#: Beyond this degree the double-precision recurrences are not vouched for.
DEGREE_CAP = 64


def _check_degree(i: int) -> None:
    if i > DEGREE_CAP:
        raise UnsupportedDegreeError(f"degree {i} exceeds the supported cap {DEGREE_CAP}")


class Polynomial:
    """Dense univariate real polynomial in monomial form on [-1, 1].

    ``coeffs[j]`` multiplies t**j.  Trailing exact zeros are trimmed; the
    zero polynomial keeps a single 0.0 coefficient, has degree 0 and sets
    ``is_zero``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=np.float64))
        nz = np.nonzero(c)[0]
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1)
        _check_degree(len(c) - 1)
        self.coeffs = np.ascontiguousarray(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == 0.0

    def __call__(self, t):
        if np.ndim(t) == 0:
            return kernels.horner(self.coeffs, float(t))
        ts = np.asarray(t, dtype=np.float64)
        out = kernels.horner_grid(self.coeffs, np.ascontiguousarray(ts.ravel()))
        return out.reshape(ts.shape)

    def deriv(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial([0.0])
        return Polynomial(self.coeffs[1:] * np.arange(1, len(self.coeffs)))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        c = np.zeros(m)
        c[: len(self.coeffs)] += self.coeffs
        c[: len(other.coeffs)] += other.coeffs
        return Polynomial(c)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial(np.convolve(self.coeffs, other.coeffs))
        return Polynomial(self.coeffs * float(other))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs.tolist()})"


@dataclass(frozen=True)
class JacobiSpec:
    """Adjacent-family selector: dimension n >= 3 and shifts a, b in {0, 1}."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"dimension must be >= 3, got {self.n}")
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"shifts must lie in {{0, 1}}, got (a, b) = ({self.a}, {self.b})")

    @property
    def alpha(self) -> float:
        return self.a + (self.n - 3) / 2.0

    @property
    def beta(self) -> float:
        return self.b + (self.n - 3) / 2.0


def gegenbauer_eval(n: int, i: int, t):
    """P_i(t) for dimension n, normalized so P_i(1) = 1; t may be an array."""
    _check_degree(i)
    if np.ndim(t) == 0:
        return kernels.geg_eval(n, i, float(t))
    ts = np.asarray(t, dtype=np.float64)
    return kernels.geg_eval_grid(n, i, np.ascontiguousarray(ts.ravel())).reshape(ts.shape)


def _jacobi_value_at_one(alpha: float, i: int) -> float:
    # binomial(i + alpha, i), evaluated as a running product to dodge Gamma overflow
    v = 1.0
    for j in range(1, i + 1):
        v *= (alpha + j) / j
    return v


def adjacent_eval(spec: JacobiSpec, i: int, t):
    """Adjacent polynomial value, rescaled so the value at t = 1 is 1."""
    _check_degree(i)
    norm = _jacobi_value_at_one(spec.alpha, i)
    if np.ndim(t) == 0:
        return kernels.jac_eval(spec.alpha, spec.beta, i, float(t)) / norm
    ts = np.asarray(t, dtype=np.float64)
    out = kernels.jac_eval_grid(spec.alpha, spec.beta, i, np.ascontiguousarray(ts.ravel()))
    return (out / norm).reshape(ts.shape)


def adjacent_deriv(spec: JacobiSpec, i: int, t: float) -> float:
    """First derivative of the normalized adjacent polynomial."""
    _check_degree(i)
    if i == 0:
        return 0.0
    a, b = spec.alpha, spec.beta
    norm = _jacobi_value_at_one(a, i)
    return 0.5 * (i + a + b + 1.0) * kernels.jac_eval(a + 1.0, b + 1.0, i - 1, float(t)) / norm


def adjacent_roots(spec: JacobiSpec, i: int) -> list[float]:
    """Strictly increasing roots of the degree-i adjacent polynomial.

    Works degree by degree: the roots of degree d-1 split (-1, 1) into d
    intervals each holding exactly one root of degree d (interlacing), so
    every root gets a guaranteed sign-change bracket.  Bisection to 1e-14
    plus a Newton polish with the analytic derivative recurrence.
    """
    _check_degree(i)
    if i < 1:
        raise ValueError("root extraction needs degree >= 1")
    a, b = spec.alpha, spec.beta
    roots = [(b - a) / (a + b + 2.0)]
    for d in range(2, i + 1):
        f = lambda t, d=d: kernels.jac_eval(a, b, d, t)
        df = lambda t, d=d: 0.5 * (d + a + b + 1.0) * kernels.jac_eval(a + 1.0, b + 1.0, d - 1, t)
        ends = [-1.0, *roots, 1.0]
        roots = [
            bracketed_root(f, ends[j], ends[j + 1], df=df)
            for j in range(d)
        ]
    return roots


def gegenbauer_polynomial(n: int, i: int) -> Polynomial:
    """Monomial form of P_i for dimension n."""
    _check_degree(i)
    if i == 0:
        return Polynomial([1.0])
    pm1 = np.array([1.0])
    p = np.array([0.0, 1.0])
    for j in range(1, i):
        nxt = np.zeros(j + 2)
        nxt[1:] = (2 * j + n - 2) * p
        nxt[: j] -= j * pm1
        pm1, p = p, nxt / (j + n - 2)
    return Polynomial(p)


def adjacent_polynomial(spec: JacobiSpec, i: int) -> Polynomial:
    """Monomial form of the normalized adjacent polynomial."""
    _check_degree(i)
    a, b = spec.alpha, spec.beta
    if i == 0:
        return Polynomial([1.0])
    pm1 = np.array([1.0])
    p = np.array([0.5 * (a - b), 0.5 * (a + b + 2.0)])
    for j in range(2, i + 1):
        s = 2.0 * j + a + b
        c1 = 2.0 * j * (j + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * s
        nxt = np.zeros(j + 1)
        nxt[: j] += c2 * p
        nxt[1:] += c3 * p
        nxt[: j - 1] -= c4 * pm1
        pm1, p = p, nxt / c1
    return Polynomial(p / _jacobi_value_at_one(a, i))


def weight_moments(n: int, max_degree: int) -> list[Fraction]:
    """Exact moments m_j of the probability measure ~ (1-t^2)^((n-3)/2) on [-1, 1].

    m_0 = 1, m_1 = 0, m_j = (j-1)/(j+n-2) * m_{j-2}.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    m = [Fraction(1), Fraction(0)]
    for j in range(2, max_degree + 1):
        m.append(Fraction(j - 1, j + n - 2) * m[j - 2])
    return m[: max_degree + 1]


def f0_coefficient(p: Polynomial, n: int) -> float:
    """Zeroth Gegenbauer coefficient of p: the mean of p under the sphere measure."""
    m = weight_moments(n, p.degree)
    return float(sum(Fraction(float(c)) * m[j] for j, c in enumerate(p.coeffs) if c))


@dataclass
class GegenbauerExpansion:
    """Coefficients f_i with sum_i f_i P_i = source polynomial."""

    n: int
    coeffs: list[float]

    def reconstruct(self) -> Polynomial:
        out = Polynomial([0.0])
        for i, f in enumerate(self.coeffs):
            out = out + f * gegenbauer_polynomial(self.n, i)
        return out


def gegenbauer_expand(p: Polynomial, n: int) -> GegenbauerExpansion:
    """Expand p in the (dimension-n) Gegenbauer basis by peeling leading terms.

    Exact up to rounding: repeatedly divides out the leading Gegenbauer
    coefficient instead of projecting by quadrature.
    """
    r = p.degree
    basis = [gegenbauer_polynomial(n, i) for i in range(r + 1)]
    rem = p.coeffs.copy()
    out = [0.0] * (r + 1)
    for i in range(r, -1, -1):
        fi = rem[i] / basis[i].coeffs[i]
        out[i] = fi
        if fi:
            rem[: i + 1] -= fi * basis[i].coeffs
    return GegenbauerExpansion(n=n, coeffs=out)
