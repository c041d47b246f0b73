"""Scalar data of a finite-type hyperbolic surface: (g, n), |chi|, kappa, systole, epsilon."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constants import universal_constants
from .errors import EpsilonOutOfRange, NonHyperbolic, SystoleOutOfRange


@dataclass(frozen=True)
class SurfaceTopology:
    genus: int
    punctures: int
    abs_chi: int = field(init=False)
    kappa: int = field(init=False)

    def __post_init__(self):
        g, n = self.genus, self.punctures
        object.__setattr__(self, "abs_chi", 2 * g - 2 + n)
        # the twice-punctured sphere gets complexity 0 by convention
        object.__setattr__(self, "kappa", 0 if (g, n) == (0, 2) else 3 * g - 3 + n)

    @property
    def is_hyperbolic(self) -> bool:
        return self.abs_chi > 0


@dataclass(frozen=True)
class SurfaceGeometry:
    """Topology plus systole and the thick-part scale ``epsilon``.

    A surface without short geodesics is passed with ``systole = 2 * eps0``;
    every bound is non-decreasing in the systole, so the threshold is the
    saturated value.
    """

    topology: SurfaceTopology
    systole: float
    epsilon: float


def make_topology(genus: int, punctures: int) -> SurfaceTopology:
    if genus < 0 or punctures < 0:
        raise NonHyperbolic(f"genus and punctures must be non-negative, got ({genus}, {punctures})")
    top = SurfaceTopology(int(genus), int(punctures))
    if not top.is_hyperbolic:
        raise NonHyperbolic(
            f"(g, n) = ({genus}, {punctures}) is not hyperbolic: 2g - 2 + n = {top.abs_chi} <= 0")
    return top


def make_geometry(topology: SurfaceTopology, systole: float,
                  epsilon: float | None = None) -> SurfaceGeometry:
    eps0 = universal_constants().eps0
    if not 0.0 < systole <= 2.0 * eps0:
        raise SystoleOutOfRange(
            f"systole must lie in (0, 2*arcsinh(1)] = (0, {2.0 * eps0:.6f}], got {systole!r}")
    if epsilon is None:
        epsilon = eps0
    if not 0.0 < epsilon <= eps0:
        raise EpsilonOutOfRange(f"epsilon must lie in (0, {eps0:.6f}], got {epsilon!r}")
    return SurfaceGeometry(topology, float(systole), float(epsilon))
