# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernels; see _pykernels.py for the reference versions."""

from libc.math cimport asinh, atan, cosh, exp, log, log1p, pow, sinh, sqrt, tanh, fabs, M_PI


cpdef double stable_asinh(double y):
    if y > 1e8:
        return log(2.0 * y) + 0.25 / (y * y)
    return log1p(y + y * y / (1.0 + sqrt(1.0 + y * y)))


cpdef double c7_objective(double x):
    cdef double h = 0.5 * x
    if h > 700.0:
        return x * 2.0 * exp(-h)
    return x * stable_asinh(1.0 / sinh(h))


cdef inline double _geom(double lo, double hi, long n, long i):
    return lo * pow(hi / lo, <double>i / <double>(n - 1))


def argmax_geometric_grid(double lo, double hi, long n):
    cdef long i, best_i = 0
    cdef double x, f, best_x = lo, best_f = c7_objective(lo)
    for i in range(1, n):
        x = _geom(lo, hi, n, i)
        f = c7_objective(x)
        if f > best_f:
            best_i = i
            best_x = x
            best_f = f
    return best_i, best_x, best_f


cpdef double min_ratio_function(double t):
    cdef double h = 0.5 * t
    cdef double th = tanh(h)
    return th * th / (t * t * atan(1.0 / sinh(h)))


def scan_min_ratio(long n, double lo, double hi):
    cdef long i
    cdef double t, f, fmin = min_ratio_function(lo), tmin = lo
    for i in range(1, n):
        t = _geom(lo, hi, n, i)
        f = min_ratio_function(t)
        if f < fmin:
            fmin = f
            tmin = t
    return fmin, tmin


def scan_sinh_linear(long n, double c2, double c3, double lo_frac):
    cdef long i
    cdef double lo = c2 * lo_frac
    cdef double r, a, b
    cdef double cmin = 1e300, lmin = 1e300, cr = lo, lr = lo
    for i in range(n):
        r = _geom(lo, c2, n, i)
        a = c3 * r - M_PI * sinh(0.5 * r)
        b = c3 * r - M_PI * sinh(r)
        if a < cmin:
            cmin = a
            cr = r
        if b < lmin:
            lmin = b
            lr = r
    return cmin, cr, lmin, lr


cpdef double collar_sum(double ell):
    return ell / tanh(0.25 * ell)


def scan_collar_monotone(long n, double hi):
    cdef long i
    cdef double h = hi / n
    cdef double prev = collar_sum(h), cur, d, ell
    cdef double dmin = 1e300, at = h
    for i in range(2, n + 1):
        ell = i * h
        cur = collar_sum(ell)
        d = cur - prev
        if d < dmin:
            dmin = d
            at = ell
        prev = cur
    return dmin, at


def scan_inj_floor(long n, double c1, double c2, double hi):
    cdef long i
    cdef double t, s, smin = 1e300, at = 1.0
    for i in range(n):
        t = _geom(1.0, hi, n, i)
        s = asinh(1.0 / (c1 * t)) - c2 / t
        if s < smin:
            smin = s
            at = t
    return smin, at


def collar_identity_residual(long n_ell, long n_s, double hi):
    cdef long i, j
    cdef double ell, w, s, lhs, rhs, rel, worst = 0.0
    for i in range(1, n_ell + 1):
        ell = hi * i / n_ell
        w = stable_asinh(1.0 / sinh(0.5 * ell))
        for j in range(n_s):
            s = w * j / (n_s - 1)
            lhs = sinh(w - s) + cosh(w - s)
            rhs = exp(-s) / tanh(0.25 * ell)
            rel = fabs(lhs - rhs) / rhs
            if rel > worst:
                worst = rel
    return worst
