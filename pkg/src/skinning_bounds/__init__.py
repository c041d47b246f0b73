"""Explicit contraction constants for Poincaré series operators and skinning maps.

The main entry point is :func:`contraction_constant`, which returns a
:class:`BoundReport` carrying ``C_{g,n,l}``, the norm bound ``1/(1+C)`` and
the intermediate quantities.  Very small numbers are held as
:class:`TowerReal` values.
"""

__version__ = "0.1.0"

from .constants import UniversalConstants, check_constant_identities, compute_c7, universal_constants
from .contraction import (BoundReport, OneMinus, asymptotic_rhs, contraction_constant,
                          loglog_ell_over_C, optimize_t, skinning_factor)
from .surface import SurfaceGeometry, SurfaceTopology, make_geometry, make_topology
from .towerreal import TowerReal

__all__ = [
    "BoundReport",
    "OneMinus",
    "SurfaceGeometry",
    "SurfaceTopology",
    "TowerReal",
    "UniversalConstants",
    "asymptotic_rhs",
    "check_constant_identities",
    "compute_c7",
    "contraction_constant",
    "loglog_ell_over_C",
    "make_geometry",
    "make_topology",
    "optimize_t",
    "skinning_factor",
    "universal_constants",
]
