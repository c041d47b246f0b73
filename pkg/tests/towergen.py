"""Random canonical towers and distance helpers for the property tests."""

import math

import mpmath
import numpy as np

from skinning_bounds.towerreal import EXP_T, T, TowerReal, normalize

LN_EXP_T = math.log(EXP_T)
LN_T = math.log(T)


def random_tower(rng: np.random.Generator, max_level: int = 3, signed: bool = True,
                 recip: bool | None = None) -> TowerReal:
    level = int(rng.integers(0, max_level + 1))
    sign = int(rng.choice([-1, 1])) if signed else 1
    rc = bool(rng.integers(0, 2)) if recip is None else recip
    if level == 0:
        # log-uniform magnitude in (1, e^T)
        mag = math.exp(rng.uniform(0.0, LN_EXP_T * 0.999999))
        if mag <= 1.0:
            mag = 2.0
    else:
        mag = math.exp(rng.uniform(LN_T, LN_EXP_T * 0.999999))
    x = normalize(sign, rc, level, mag)
    assert x == TowerReal(sign, rc, level, mag), (sign, rc, level, mag)
    return x


def random_towers(seed: int, n: int, max_level: int = 3, signed: bool = True) -> list[TowerReal]:
    """``n`` canonical towers, drawn in bulk.

    Magnitudes are log-uniform over the canonical range of each level, so
    level 1 covers both moderate exponents (~700) and huge ones (~1e300).
    """
    rng = np.random.default_rng(seed)
    levels = rng.integers(0, max_level + 1, n)
    signs = rng.choice([-1, 1], n) if signed else np.ones(n, dtype=int)
    recips = rng.integers(0, 2, n).astype(bool)
    lo = np.where(levels == 0, 0.0, LN_T)
    mags = np.exp(rng.uniform(lo, LN_EXP_T * 0.999999))
    mags[(levels == 0) & (mags <= 1.0)] = 2.0
    return [TowerReal(int(s), bool(r), int(k), float(m))
            for s, r, k, m in zip(signs, recips, levels, mags)]


def ulp_distance(a: TowerReal, b: TowerReal) -> float:
    """Distance of top-level magnitudes in units of the larger ulp; inf if structure differs."""
    if (a.sign, a.recip, a.level) != (b.sign, b.recip, b.level):
        # 1/(1+u) with u tiny renders as recip; allow the unit crossing
        if a.level == b.level == 0 and a.sign == b.sign:
            va, vb = float(a), float(b)
            return abs(va - vb) / math.ulp(max(abs(va), abs(vb)))
        return math.inf
    return abs(a.mag - b.mag) / math.ulp(max(a.mag, b.mag))


def log_value(x: TowerReal) -> float:
    """``ln|x|`` as a float, for ``x`` at level 0 or 1."""
    assert x.level <= 1
    v = math.log(x.mag) if x.level == 0 else x.mag
    return -v if x.recip else v


def lifted_ulp_distance(a: TowerReal, b: TowerReal, via: TowerReal) -> float:
    """Error of ``a`` vs ``b`` measured in ulps of the top-level mag of ``via``.

    Used when a chain of products passed through an intermediate ``via`` one
    level above the results: the intermediate's mag then carries the coarsest
    rounding, so its ulp is the unit of comparison.  ``ln|a| - ln|b|`` is the
    absolute error at that level.
    """
    if a.sign != b.sign or a.level or b.level or via.level != 1:
        return ulp_distance(a, b)
    return abs(log_value(a) - log_value(b)) / math.ulp(via.mag)


def _exact_log(x: TowerReal):
    """``ln|x|`` at 120 bits; exact for level 1, correctly rounded for level 0."""
    with mpmath.workprec(120):
        v = mpmath.log(mpmath.mpf(x.mag)) if x.level == 0 else mpmath.mpf(x.mag)
        return -v if x.recip else v


def real_less(x: TowerReal, y: TowerReal) -> bool:
    """``x < y`` for towers at level <= 1, decided on real values.

    Float comparisons of the values or their logs settle most pairs; near
    ties fall back to 120-bit logs, which separate mags one ulp apart.
    """
    if x.sign != y.sign:
        return x.sign < y.sign
    if x.sign == 0:
        return False
    if x.level == 0 and y.level == 0 and not (x.recip or y.recip):
        return x.sign * x.mag < y.sign * y.mag
    lx, ly = log_value(x), log_value(y)
    if abs(lx - ly) <= 4 * math.ulp(max(abs(lx), abs(ly))):
        ex, ey = _exact_log(x), _exact_log(y)
        less_abs, equal = ex < ey, ex == ey
    else:
        less_abs, equal = lx < ly, False
    if equal:
        return False
    return less_abs if x.sign > 0 else not less_abs
