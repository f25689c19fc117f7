"""Backend selection for the conditional-entropy kernels.

The compiled extension is used when it was built; otherwise the numpy
implementation is loaded.  Set ``XDISCORD_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _kernels_py

if os.environ.get("XDISCORD_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

conditional_entropy_grid = _impl.conditional_entropy_grid
conditional_entropy_point = _impl.conditional_entropy_point

__all__ = ["BACKEND", "conditional_entropy_grid", "conditional_entropy_point"]
