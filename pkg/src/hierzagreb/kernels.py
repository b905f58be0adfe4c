"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python twin in ``_pykernels`` is loaded. Setting the environment
variable ``HIERZAGREB_PURE=1`` forces the pure backend.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("HIERZAGREB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

degrees = _impl.degrees
degree_indices = _impl.degree_indices
subset_sums = _impl.subset_sums
hier_edges = _impl.hier_edges

__all__ = ["BACKEND", "degrees", "degree_indices", "subset_sums", "hier_edges"]
