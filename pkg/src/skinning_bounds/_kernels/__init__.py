"""Grid kernels behind the oracle scans and the c7 bracketing search.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python module with the same functions is imported.  Setting
``SKINNING_BOUNDS_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("SKINNING_BOUNDS_PURE_PYTHON"):
    from ._pykernels import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._ckernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        BACKEND = "python"

__all__ = [
    "BACKEND",
    "argmax_geometric_grid",
    "c7_objective",
    "collar_identity_residual",
    "collar_sum",
    "min_ratio_function",
    "scan_collar_monotone",
    "scan_inj_floor",
    "scan_min_ratio",
    "scan_sinh_linear",
    "stable_asinh",
]
