"""Collar geometry of a closed geodesic and of offset bands inside its collar."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernels import stable_asinh
from .constants import universal_constants
from .errors import OffsetExceedsWidth, ParameterOutOfRange

_SMALL_LENGTH = 1e-8


def collar_half_width(length: float) -> float:
    """Half-width ``asinh(csch(length/2))`` of the standard collar."""
    if not length > 0:
        raise ParameterOutOfRange(f"geodesic length must be positive, got {length!r}")
    if length < _SMALL_LENGTH:
        return math.log(4.0 / length)
    h = 0.5 * length
    if h > 700.0:
        return 2.0 * math.exp(-h)
    return stable_asinh(1.0 / math.sinh(h))


@dataclass(frozen=True)
class CollarProfile:
    geodesic_length: float
    offset: float
    half_width: float
    band_area: float
    boundary_length: float
    area_plus_length: float

    @property
    def identity_residual(self) -> float:
        """Relative gap between the summed and the closed-form ``area + length``."""
        total = self.band_area + self.boundary_length
        return abs(total - self.area_plus_length) / self.area_plus_length


def collar_profile(length: float, offset: float) -> CollarProfile:
    """Band between the geodesic-side offset ``offset`` and the collar edge.

    ``band_area = l sinh(w - s)``, ``boundary_length = l cosh(w - s)``, and
    their sum collapses to ``e^-s l / tanh(l/4)`` since ``e^w = coth(l/4)``.
    """
    w = collar_half_width(length)
    if offset < 0:
        raise ParameterOutOfRange(f"offset must be non-negative, got {offset!r}")
    if offset > w * (1.0 + 4.0 * 2.0 ** -52):
        raise OffsetExceedsWidth(f"offset {offset!r} exceeds the collar half-width {w!r}")
    d = max(w - offset, 0.0)
    return CollarProfile(
        geodesic_length=length,
        offset=offset,
        half_width=w,
        band_area=length * math.sinh(d),
        boundary_length=length * math.cosh(d),
        area_plus_length=math.exp(-offset) * length / math.tanh(0.25 * length),
    )


def injectivity_floor(t: float) -> float:
    """``asinh(1/(c1 t))``, a lower bound for the injectivity radius on the thick part.

    It dominates ``c2/t`` for all ``t >= 1`` with equality at ``t = 1``.
    """
    if not t >= 1.0:
        raise ParameterOutOfRange(f"t must be >= 1, got {t!r}")
    k = universal_constants()
    value = math.asinh(1.0 / (k.c1 * t))
    assert value >= k.c2 / t * (1.0 - 4.0 * 2.0 ** -52), (t, value)
    return value
