"""Selects the evaluation-kernel backend at import time.

The compiled extension ``dronetco._kernels`` is preferred; the pure-Python
module ``dronetco._kernels_py`` is the fallback when the extension is not
built. Setting DRONETCO_PURE_PYTHON=1 forces the fallback. Both backends are
bit-identical, so the choice never changes results, only speed.
"""

import os

from . import _kernels_py

if os.environ.get("DRONETCO_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND_NAME = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND_NAME = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND_NAME = "python"


def active_backend() -> str:
    """Name of the kernel backend in use: "cython" or "python"."""
    return BACKEND_NAME
