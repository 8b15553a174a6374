"""Backend selection for the brute-force kernels.

The compiled extension is used when it was built; otherwise the numpy
fallback.  ``EPOLY_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "numpy"
commutator_hist_cayley = _kernels_py.commutator_hist_cayley
commutator_hist_sl2 = _kernels_py.commutator_hist_sl2

if os.environ.get("EPOLY_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        commutator_hist_cayley = _kernels.commutator_hist_cayley
        commutator_hist_sl2 = _kernels.commutator_hist_sl2

__all__ = ["BACKEND", "commutator_hist_cayley", "commutator_hist_sl2"]
