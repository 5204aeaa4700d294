"""Exact computations in the RO(Z/2)-graded cohomology of the Grassmannians Gr_k(U)."""

from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
