"""Pure-Python grid kernels.

Every function here has a line-for-line twin in ``_ckernels.pyx``; the two
must return identical tuples up to libm rounding.
"""

from math import asinh, atan, cosh, exp, log, log1p, pi, sinh, sqrt, tanh


def stable_asinh(y):
    # asinh for y >= 0 without overflow in y*y
    if y > 1e8:
        return log(2.0 * y) + 0.25 / (y * y)
    return log1p(y + y * y / (1.0 + sqrt(1.0 + y * y)))


def c7_objective(x):
    """x * asinh(csch(x/2))."""
    h = 0.5 * x
    if h > 700.0:
        return x * 2.0 * exp(-h)
    return x * stable_asinh(1.0 / sinh(h))


def _geom(lo, hi, n, i):
    return lo * (hi / lo) ** (i / (n - 1))


def argmax_geometric_grid(lo, hi, n):
    """Index, abscissa and value of the largest ``c7_objective`` sample."""
    best_i = 0
    best_x = lo
    best_f = c7_objective(lo)
    for i in range(1, n):
        x = _geom(lo, hi, n, i)
        f = c7_objective(x)
        if f > best_f:
            best_i, best_x, best_f = i, x, f
    return best_i, best_x, best_f


def min_ratio_function(t):
    h = 0.5 * t
    th = tanh(h)
    return th * th / (t * t * atan(1.0 / sinh(h)))


def scan_min_ratio(n, lo, hi):
    """Minimum of tanh^2(t/2) / (t^2 arctan(csch(t/2))) on a log grid."""
    fmin = min_ratio_function(lo)
    tmin = lo
    for i in range(1, n):
        t = _geom(lo, hi, n, i)
        f = min_ratio_function(t)
        if f < fmin:
            fmin, tmin = f, t
    return fmin, tmin


def scan_sinh_linear(n, c2, c3, lo_frac):
    """Worst slack of pi*sinh(r/2) <= c3*r and of pi*sinh(r) <= c3*r on (0, c2].

    Returns ``(corrected_min, r_at, literal_min, r_at_literal)`` where the
    slack is ``c3*r - lhs``; negative means the inequality fails there.
    """
    lo = c2 * lo_frac
    cmin = lmin = 1e300
    cr = lr = lo
    for i in range(n):
        r = _geom(lo, c2, n, i)
        a = c3 * r - pi * sinh(0.5 * r)
        b = c3 * r - pi * sinh(r)
        if a < cmin:
            cmin, cr = a, r
        if b < lmin:
            lmin, lr = b, r
    return cmin, cr, lmin, lr


def collar_sum(ell):
    return ell / tanh(0.25 * ell)


def scan_collar_monotone(n, hi):
    """Smallest forward difference of l / tanh(l/4) on a uniform grid of (0, hi]."""
    h = hi / n
    prev = collar_sum(h)
    dmin = 1e300
    at = h
    for i in range(2, n + 1):
        ell = i * h
        cur = collar_sum(ell)
        d = cur - prev
        if d < dmin:
            dmin, at = d, ell
        prev = cur
    return dmin, at


def scan_inj_floor(n, c1, c2, hi):
    """Worst slack of asinh(1/(c1 t)) >= c2/t on a log grid of [1, hi]."""
    smin = 1e300
    at = 1.0
    for i in range(n):
        t = _geom(1.0, hi, n, i)
        s = asinh(1.0 / (c1 * t)) - c2 / t
        if s < smin:
            smin, at = s, t
    return smin, at


def collar_identity_residual(n_ell, n_s, hi):
    """Max relative gap between sinh(w-s)+cosh(w-s) and e^-s coth(l/4).

    ``l`` runs over a uniform grid of (0, hi], ``s`` over a uniform grid of
    ``[0, w(l)]``.
    """
    worst = 0.0
    for i in range(1, n_ell + 1):
        ell = hi * i / n_ell
        w = stable_asinh(1.0 / sinh(0.5 * ell))
        for j in range(n_s):
            s = w * j / (n_s - 1)
            lhs = sinh(w - s) + cosh(w - s)
            rhs = exp(-s) / tanh(0.25 * ell)
            rel = abs(lhs - rhs) / rhs
            if rel > worst:
                worst = rel
    return worst
