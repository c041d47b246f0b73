"""The contraction constant ``C_{g,n,l}`` and the operator-norm bound ``1/(1+C)``.

Integrating the area defect against the mass floor gives, for ``t >= 1``,

    1 - |psi| >= K l exp(-a2 t^(2 kappa)) / (kappa |chi| t^2) |psi|,
    K = e pi^2 c4 / (288 (c5 + c7)),

and the right-hand side is largest at ``t = 1``.  ``a2`` is
doubly exponential in ``|chi|``, so everything is carried in log form and
``C`` itself lives in a :class:`TowerReal`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

from .bounds import a1, ln_a2, r_star
from .constants import universal_constants
from .errors import KappaZero, ParameterOutOfRange, RegimeViolation
from .surface import SurfaceGeometry, SurfaceTopology, make_geometry, make_topology
from .towerreal import TowerReal, dominant_sum, exp_of, render

__all__ = [
    "BoundReport",
    "OneMinus",
    "a1",
    "asymptotic_rhs",
    "contraction_constant",
    "contraction_prefactor",
    "ln_C_difference",
    "ln_a2",
    "loglog_ell_over_C",
    "optimize_t",
    "skinning_factor",
]

# below this C, 1/(1+C) = 1 - C + O(C^2) is applied in split form
_SMALL_C = 1e-8
# above this a2, ln(a2 + L) = ln a2 + log1p(L/a2)
_DIRECT_LOGLOG_MAX = math.log(1e15)


@total_ordering
@dataclass(frozen=True)
class OneMinus:
    """The number ``1 - gap`` for a positive tower ``gap`` below one.

    ``1/(1+C)`` is closer to one than any double can resolve, so it is stored
    through its distance to one; ordering is reversed relative to ``gap``.
    """

    gap: TowerReal

    def __float__(self) -> float:
        return 1.0 - float(self.gap)

    def __lt__(self, other):
        if isinstance(other, OneMinus):
            return other.gap < self.gap
        # 1 - gap < x  <=>  1 - x < gap
        return TowerReal.from_real(1.0 - float(other)) < self.gap

    def __str__(self) -> str:
        return render_one_minus(self)


def render_one_minus(x: OneMinus, approx: bool = True) -> str:
    body = render(x.gap) if approx else render(x.gap).split(" ≈ ")[0]
    if approx and " ≈ " in body:
        exact, rough = body.split(" ≈ ", 1)
        return f"1 - {exact} ≈ 1 - {rough}"
    return f"1 - {body}"


@dataclass(frozen=True)
class BoundReport:
    genus: int
    punctures: int
    abs_chi: int
    kappa: int
    ell: float
    epsilon: float
    t_used: float
    a1: float
    ln_a2: float
    C: TowerReal
    norm_bound: OneMinus
    gap: TowerReal
    ln_C: TowerReal
    ln_C_finite: float
    loglog_ell_over_C: float
    asymptotic_rhs: float
    asymptotic_ratio: float


def contraction_prefactor() -> float:
    """``K = e pi^2 c4 / (288 (c5 + c7))``."""
    k = universal_constants()
    return math.e * math.pi ** 2 * k.c4 / (288.0 * k.c57)


def _require_kappa(top: SurfaceTopology):
    if top.kappa < 1:
        raise KappaZero(
            f"kappa=0: contraction constant undefined for (g, n) = ({top.genus}, {top.punctures})")


def _check_regime(top: SurfaceTopology, t: float) -> float:
    rs = r_star(top.kappa, t)
    limit = universal_constants().c2 / (top.abs_chi * t)
    if not rs < limit:
        raise RegimeViolation(f"r* = {rs!r} is not below c2/(|chi| t) = {limit!r}")
    return rs


def _ln_suppression(top: SurfaceTopology, epsilon: float, t: float) -> float:
    """``ln(a2 t^(2 kappa))``."""
    return ln_a2(top, epsilon) + 2.0 * top.kappa * math.log(t)


def ln_contraction_finite(geometry: SurfaceGeometry, t: float = 1.0) -> float:
    """The finite part ``ln(K l / (kappa |chi| t^2))`` of ``ln C``."""
    top = geometry.topology
    return math.log(contraction_prefactor() * geometry.systole / (top.kappa * top.abs_chi * t * t))


def ln_contraction(geometry: SurfaceGeometry, t: float = 1.0) -> TowerReal:
    """``ln C = ln(K l / (kappa |chi| t^2)) - a2 t^(2 kappa)``."""
    top = geometry.topology
    finite = ln_contraction_finite(geometry, t)
    suppression = exp_of(TowerReal.from_real(_ln_suppression(top, geometry.epsilon, t)))
    return dominant_sum(TowerReal.from_real(finite), -suppression)


def split_one_plus(C: TowerReal) -> tuple[TowerReal, OneMinus]:
    """``(C/(1+C), 1/(1+C))`` without forming ``1 + C`` for tiny ``C``.

    For ``C < 1e-8`` the factor ``1/(1+C)`` is applied in double precision, so
    the relative error of the gap is below ``C`` (a few ulp in practice).
    """
    c = float(C)
    if c < _SMALL_C:
        gap = C * TowerReal.from_real(1.0 / (1.0 + c))
    else:
        gap = TowerReal.from_real(c / (1.0 + c))
    return gap, OneMinus(gap)


def asymptotic_rhs(topology: SurfaceTopology) -> float:
    """``(4/eps0) chi^2 + coth(pi/12) chi + pi sinh(c2/2) kappa``."""
    k = universal_constants()
    chi = topology.abs_chi
    return (4.0 / k.eps0) * chi * chi + k.c1 * chi + math.pi * math.sinh(0.5 * k.c2) * topology.kappa


def loglog_ell_over_C(geometry: SurfaceGeometry, t: float = 1.0) -> float:
    """``ln ln(l/C) = ln(a2 t^(2 kappa) + ln(kappa |chi| t^2 / K))``; independent of ``l``."""
    top = geometry.topology
    _require_kappa(top)
    ln_s = _ln_suppression(top, geometry.epsilon, t)
    shift = math.log(top.kappa * top.abs_chi * t * t / contraction_prefactor())
    if ln_s <= _DIRECT_LOGLOG_MAX:
        return math.log(math.exp(ln_s) + shift)
    return ln_s + math.log1p(shift * math.exp(-ln_s))


def contraction_constant(geometry: SurfaceGeometry, t: float = 1.0) -> BoundReport:
    top = geometry.topology
    _require_kappa(top)
    if not t >= 1.0:
        raise ParameterOutOfRange(f"t must be >= 1, got {t!r}")
    _check_regime(top, t)

    ln_C = ln_contraction(geometry, t)
    C = exp_of(ln_C)
    gap, norm_bound = split_one_plus(C)
    loglog = loglog_ell_over_C(geometry, t)
    rhs = asymptotic_rhs(top)
    return BoundReport(
        genus=top.genus,
        punctures=top.punctures,
        abs_chi=top.abs_chi,
        kappa=top.kappa,
        ell=geometry.systole,
        epsilon=geometry.epsilon,
        t_used=float(t),
        a1=a1(top, geometry.epsilon),
        ln_a2=ln_a2(top, geometry.epsilon),
        C=C,
        norm_bound=norm_bound,
        gap=gap,
        ln_C=ln_C,
        ln_C_finite=ln_contraction_finite(geometry, t),
        loglog_ell_over_C=loglog,
        asymptotic_rhs=rhs,
        asymptotic_ratio=loglog / rhs,
    )


def ln_C_difference(a: BoundReport, b: BoundReport) -> float:
    """``ln C_a - ln C_b`` without collapsing either side to one double.

    ``ln C`` is ``finite - a2 t^(2 kappa)`` with ``a2`` up to ``e^(10^4)`` and
    beyond, so a single float for ``ln C`` cannot resolve changes of the
    finite part.  When both reports share the suppression term (same
    topology, epsilon and t) the difference is that of the finite parts.
    """
    same = (a.kappa, a.ln_a2, a.t_used) == (b.kappa, b.ln_a2, b.t_used)
    finite = a.ln_C_finite - b.ln_C_finite
    if same:
        return finite
    sa = a.ln_a2 + 2.0 * a.kappa * math.log(a.t_used)
    sb = b.ln_a2 + 2.0 * b.kappa * math.log(b.t_used)
    if max(sa, sb) >= 709.0:
        return -math.inf if sa > sb else math.inf
    return finite - (math.exp(sa) - math.exp(sb))


def optimize_t(geometry: SurfaceGeometry, t_grid: Iterable[float]) -> tuple[float, BoundReport]:
    """Grid maximizer of the gap over ``t``; ties go to the first grid point."""
    best = None
    for t in t_grid:
        if not t >= 1.0:
            raise ParameterOutOfRange(f"t grid must lie in [1, inf), got {t!r}")
        rep = contraction_constant(geometry, t)
        if best is None or rep.gap > best[1].gap:
            best = (float(t), rep)
    if best is None:
        raise ParameterOutOfRange("empty t grid")
    return best


def skinning_factor(boundary: Sequence[tuple[int, int, float]], epsilon: float | None = None,
                    t: float = 1.0) -> tuple[OneMinus, list[BoundReport], int]:
    """Largest ``1/(1+C)`` over the boundary components.

    Returns ``(max_norm_bound, per_component_reports, dominating_index)`` with a
    0-based index.  Errors are re-raised with the 1-based component number.
    """
    if not boundary:
        raise ParameterOutOfRange("boundary must contain at least one component")
    reports = []
    for i, (g, n, ell) in enumerate(boundary, start=1):
        try:
            geo = make_geometry(make_topology(g, n), ell, epsilon)
            reports.append(contraction_constant(geo, t))
        except (ValueError, RuntimeError) as exc:
            raise type(exc)(f"component {i} ({g},{n},{ell}): {exc}") from exc
    idx = min(range(len(reports)), key=lambda j: reports[j].gap)
    return reports[idx].norm_bound, reports, idx
