"""Select the compiled kernels when available, else the pure-Python ones.

Set ``EQUIGRASS_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
orbit_product_counts = _pykernels.orbit_product_counts
cell_bidegree = _pykernels.cell_bidegree

if os.environ.get("EQUIGRASS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        orbit_product_counts = _ckernels.orbit_product_counts
        cell_bidegree = _ckernels.cell_bidegree

distinct_permutations = _pykernels.distinct_permutations

__all__ = ["BACKEND", "orbit_product_counts", "cell_bidegree", "distinct_permutations"]
