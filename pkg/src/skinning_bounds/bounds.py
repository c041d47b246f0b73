"""Effective geometric estimates: diameters, mass floors, area defect, m(r).

Mass bounds are normalized to a quadratic differential of unit norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .collar import collar_half_width
from .constants import universal_constants
from .errors import ParameterOutOfRange
from .surface import SurfaceGeometry, SurfaceTopology
from .towerreal import T, TowerReal, dominant_sum, exp_of


@dataclass(frozen=True)
class BoundContext:
    geometry: SurfaceGeometry
    t: float = 1.0

    def __post_init__(self):
        if not self.t >= 1.0:
            raise ParameterOutOfRange(f"t must be >= 1, got {self.t!r}")

    @property
    def s(self) -> float:
        """Thick-part offset ``log+(c1 t)``."""
        return max(0.0, math.log(universal_constants().c1 * self.t))

    @property
    def r_bound(self) -> float:
        """Radii below ``c2 / (|chi| t)`` are admissible."""
        return universal_constants().c2 / (self.geometry.topology.abs_chi * self.t)

    def r_admissible(self, r: float) -> bool:
        return 0.0 < r < self.r_bound


def a1(topology: SurfaceTopology, epsilon: float) -> float:
    k = universal_constants()
    chi, kappa = topology.abs_chi, topology.kappa
    return 4.0 * chi * chi / epsilon + 2.0 * kappa * math.log(k.c1) + 2.0 * k.c2 * k.c3


def ln_a2(topology: SurfaceTopology, epsilon: float) -> float:
    """``ln a2 = ln ln(e c4) + a1 + 2(1 + c3)``; ``a2`` itself is never formed."""
    k = universal_constants()
    return math.log(math.log(math.e * k.c4)) + a1(topology, epsilon) + 2.0 * (1.0 + k.c3)


def thick_diameter_bound(abs_chi: int, epsilon: float) -> float:
    return 4.0 * abs_chi / epsilon


def core_path_bound(topology: SurfaceTopology, systole: float, epsilon: float) -> float:
    chi = topology.abs_chi
    return 4.0 * chi * chi / epsilon + 2.0 * topology.kappa * collar_half_width(systole)


def mass_floor_M0(abs_chi: int, systole: float) -> float:
    return min(systole, 1.0) / (16.0 * abs_chi)


def mass_decay_factor(s: float, t: float) -> float:
    if not 0.0 <= s <= t:
        raise ParameterOutOfRange(f"need 0 <= s <= t, got s={s!r}, t={t!r}")
    return math.exp(s - t)


def area_defect_lower(kappa: int, r: float, t: float) -> float:
    """``pi/3 - kappa r t (c5 + c7)``; not clipped at zero."""
    if kappa < 1 or not 0.0 <= r < 1.0 or not t >= 1.0:
        raise ParameterOutOfRange(f"need kappa >= 1, 0 <= r < 1, t >= 1; got {kappa}, {r!r}, {t!r}")
    return math.pi / 3.0 - kappa * r * t * universal_constants().c57


def r_star(kappa: int, t: float) -> float:
    """Upper integration limit where the area defect stays non-negative (and r < 1/(4t))."""
    if kappa < 1 or not t >= 1.0:
        raise ParameterOutOfRange(f"need kappa >= 1 and t >= 1, got kappa={kappa}, t={t!r}")
    return min(1.0 / (4.0 * t), math.pi / (3.0 * kappa * t * universal_constants().c57))


def curve_length_bound(topology: SurfaceTopology, epsilon: float, t: float) -> float:
    if not t >= 1.0:
        raise ParameterOutOfRange(f"t must be >= 1, got {t!r}")
    return a1(topology, epsilon) + 2.0 * topology.kappa * math.log(t)


def ball_intersection_bound(w: float) -> float:
    if not w > 0:
        raise ParameterOutOfRange(f"w must be positive, got {w!r}")
    return 2.0 * (1.0 + universal_constants().c3) * w


def _m_floor_parts(ctx: BoundContext, r: float):
    if not 0.0 <= r < ctx.r_bound:
        raise ParameterOutOfRange(f"r={r!r} outside [0, {ctx.r_bound!r})")
    k = universal_constants()
    geo = ctx.geometry
    top = geo.topology
    ln_pref = math.log(math.e * k.c4 * geo.systole / (16.0 * top.abs_chi))
    ln_suppression = (ln_a2(top, geo.epsilon) + 2.0 * top.kappa * math.log(ctx.t)
                      - (1.0 + k.c3) * r)
    return ln_pref, ln_suppression


def ln_m_floor(ctx: BoundContext, r: float) -> float | TowerReal:
    """Log of the lower bound ``e c4 l/(16|chi|) exp(-a2 t^(2 kappa) e^(-(1+c3) r))``.

    Returns a float while ``a2 t^(2 kappa) e^(-(1+c3) r)`` fits in a double and
    a negative :class:`TowerReal` beyond that.
    """
    ln_pref, ln_sup = _m_floor_parts(ctx, r)
    if ln_sup < T:
        return ln_pref - math.exp(ln_sup)
    return ln_m_floor_tower(ctx, r)


def ln_m_floor_tower(ctx: BoundContext, r: float) -> TowerReal:
    ln_pref, ln_sup = _m_floor_parts(ctx, r)
    return dominant_sum(TowerReal.from_real(ln_pref), -exp_of(TowerReal.from_real(ln_sup)))
