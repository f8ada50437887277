"""Bracketed root finding: bisection to a fixed width, optional Newton polish.

Deliberately eigen-solver free: every root this package needs lives in a
mathematically guaranteed sign-change bracket, so bisection always
converges and a couple of Newton steps recover the last digits.
"""

from .errors import RootBracketError

BISECT_WIDTH = 1e-14
MAX_BISECT = 200


def bracketed_root(f, lo, hi, *, flo=None, fhi=None, df=None, width=BISECT_WIDTH):
    """Root of f in [lo, hi]; f(lo) and f(hi) must differ in sign.

    Bisects until the bracket is narrower than ``width``, then applies up
    to three Newton steps with the analytic derivative ``df`` (if given),
    rejecting any step that leaves the original bracket.
    """
    a, b = float(lo), float(hi)
    fa = f(a) if flo is None else flo
    fb = f(b) if fhi is None else fhi
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise RootBracketError(f"no sign change on [{a!r}, {b!r}] (f: {fa!r} -> {fb!r})")
    for _ in range(MAX_BISECT):
        if b - a < width:
            break
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    x = 0.5 * (a + b)
    if df is not None:
        for _ in range(3):
            d = df(x)
            if d == 0.0:
                break
            step = f(x) / d
            x_new = x - step
            if not (lo <= x_new <= hi):
                break
            if x_new == x:
                break
            x = x_new
    return x
