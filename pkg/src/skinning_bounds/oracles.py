"""Independent numerical checks of the elementary inequalities behind the bounds.

Each ``verify_*`` function scans or integrates with plain floating point and
returns an :class:`OracleResult`.  Status ``"documented"`` marks a known,
expected failure of a literal inequality whose corrected form is checked
separately; it never counts as a suite failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from . import _kernels
from .constants import universal_constants

PASS, FAIL, DOCUMENTED = "pass", "fail", "documented"


@dataclass(frozen=True)
class OracleResult:
    claim_id: str
    status: str
    worst_point: float
    worst_residual: float
    samples: int
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _check_grid(grid: int):
    if grid < 1000:
        raise ValueError(f"grid must be at least 1000, got {grid}")


def verify_min_ratio_function(grid: int = 10_000, tol: float | None = None) -> OracleResult:
    """``tanh^2(t/2) / (t^2 arctan(csch(t/2))) >= 1/(2 pi)`` on ``(0, 50]``.

    Near zero the function is ``(1 + t/pi)/(2 pi) + O(t^2)``, so the limit
    ``1/(2 pi)`` is the infimum.
    """
    _check_grid(grid)
    floor = 1.0 / (2.0 * math.pi)
    approach_tol = 1e-6 if tol is None else tol
    fmin, tmin = _kernels.scan_min_ratio(grid, 1e-8, 50.0)
    # series limit at t -> 0: (1/4) / (pi/2)
    limit = 0.25 / (0.5 * math.pi)
    above = fmin >= floor * (1.0 - 1e-9)
    approaches = abs(fmin - floor) < approach_tol and abs(limit - floor) < approach_tol
    return OracleResult("min_ratio_function", _status(above and approaches), tmin,
                        fmin - floor, grid, note=f"inf over grid {fmin!r}, series limit {limit!r}")


def verify_sinh_linear_bound(grid: int = 10_000, tol: float | None = None) -> list[OracleResult]:
    """``pi sinh(r/2) <= c3 r`` on ``(0, c2]`` with equality at ``r = c2``.

    Also records that the stronger chain through ``pi sinh(r)`` fails, since
    ``c3 < pi``.
    """
    _check_grid(grid)
    k = universal_constants()
    eq_tol = 1e-9 if tol is None else tol
    cmin, cr, lmin, lr = _kernels.scan_sinh_linear(grid, k.c2, k.c3, 1e-6)
    at_c2 = abs(k.c3 * k.c2 - math.pi * math.sinh(0.5 * k.c2))
    corrected_ok = cmin >= -eq_tol and at_c2 < eq_tol
    corrected = OracleResult("sinh_linear_bound", _status(corrected_ok), cr, cmin, grid,
                             note=f"|c3 c2 - pi sinh(c2/2)| = {at_c2:.3g}")
    literal = OracleResult("sinh_linear_bound_literal", DOCUMENTED if lmin < 0 else PASS,
                           lr, lmin, grid,
                           note="pi sinh(r) <= c3 r fails on all of (0, c2]: pi sinh(r) >= pi r > c3 r")
    return [corrected, literal]


def verify_collar_monotonicity(grid: int = 10_000, tol: float | None = None) -> OracleResult:
    """``l -> l / tanh(l/4)`` strictly increasing on ``(0, 2 eps0]``."""
    _check_grid(grid)
    hi = 2.0 * universal_constants().eps0
    dmin, at = _kernels.scan_collar_monotone(grid, hi)
    floor = 0.0 if tol is None else tol
    return OracleResult("collar_monotonicity", _status(dmin > floor), at, dmin, grid)


def collar_identity_check(n: int = 100, tol: float | None = None) -> OracleResult:
    """``sinh(w-s) + cosh(w-s) = e^-s coth(l/4)`` on an ``n x n`` grid."""
    hi = 2.0 * universal_constants().eps0
    worst = _kernels.collar_identity_residual(n, n, hi)
    limit = 1e-10 if tol is None else tol
    return OracleResult("collar_identity", _status(worst < limit), math.nan, worst, n * n)


def verify_inj_floor(grid: int = 10_000, tol: float | None = None) -> OracleResult:
    """``asinh(1/(c1 t)) >= c2 / t`` on ``[1, 1000]``, sharp at ``t = 1``."""
    _check_grid(grid)
    k = universal_constants()
    eq_tol = 1e-12 if tol is None else tol
    smin, at = _kernels.scan_inj_floor(grid, k.c1, k.c2, 1000.0)
    at_one = abs(math.asinh(1.0 / k.c1) - k.c2)
    ok = smin >= -eq_tol and at_one < eq_tol
    return OracleResult("inj_floor", _status(ok), at, smin, grid,
                        note=f"residual at t=1: {at_one:.3g}")


def gap_integral_closed_form(kappa: int, t: float) -> float:
    """``int_0^{r*} (pi/3 - kappa r t (c5+c7)) dr`` in closed form, both branches."""
    c57 = universal_constants().c57
    root = math.pi / (3.0 * kappa * t * c57)
    cap = 1.0 / (4.0 * t)
    if root <= cap:
        return math.pi ** 2 / (18.0 * kappa * t * c57)
    return math.pi * cap / 3.0 - 0.5 * kappa * t * c57 * cap * cap


def gap_integral_quadrature(kappa: int, t: float) -> float:
    """Adaptive quadrature of the area defect clipped at zero over ``[0, 1/(4t)]``."""
    c57 = universal_constants().c57

    def integrand(r):
        return max(0.0, math.pi / 3.0 - kappa * r * t * c57)

    cap = 1.0 / (4.0 * t)
    # flag the kink where the clipped integrand reaches zero
    kink = math.pi / (3.0 * kappa * t * c57)
    points = [kink] if kink < cap else None
    val, _ = quad(integrand, 0.0, cap, epsabs=1e-15, epsrel=1e-13, limit=200, points=points)
    return val


def verify_gap_integral(kappa: int, t: float, rtol: float = 1e-10) -> OracleResult:
    if kappa < 1 or not t >= 1.0:
        raise ValueError(f"need kappa >= 1 and t >= 1, got {kappa}, {t!r}")
    closed = gap_integral_closed_form(kappa, t)
    numeric = gap_integral_quadrature(kappa, t)
    rel = abs(numeric - closed) / closed
    return OracleResult(f"gap_integral[kappa={kappa},t={t:g}]", _status(rel < rtol), t, rel, 1,
                        note=f"closed {closed!r}, quadrature {numeric!r}")


def verify_all(grid: int = 10_000, tol: float | None = None) -> list[OracleResult]:
    """Every oracle at its default settings (``tol`` overrides all tolerances)."""
    results = [verify_min_ratio_function(grid, tol)]
    results.extend(verify_sinh_linear_bound(grid, tol))
    results.append(verify_collar_monotonicity(grid, tol))
    results.append(collar_identity_check(100, tol))
    results.append(verify_inj_floor(grid, tol))
    for kappa, t in ((1, 1.0), (2, 1.0), (3, 2.0), (1, 10.0)):
        results.append(verify_gap_integral(kappa, t, 1e-10 if tol is None else tol))
    return results
