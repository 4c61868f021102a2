"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the numpy
implementations are used. Set ``MINKOWSKI2D_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("MINKOWSKI2D_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
else:
    _impl = _kernels_py

polygon_gauge = _impl.polygon_gauge
polygon_support = _impl.polygon_support
lp_gauge = _impl.lp_gauge
lp_support = _impl.lp_support
max_pair_lp = _impl.max_pair_lp
max_pair_polygon = _impl.max_pair_polygon

__all__ = [
    "BACKEND",
    "polygon_gauge",
    "polygon_support",
    "lp_gauge",
    "lp_support",
    "max_pair_lp",
    "max_pair_polygon",
]
