"""Hot kernels: compiled when available, pure Python otherwise.

Set ``HCONE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import pivot_py

IMPLEMENTATION = "python"
pivot = pivot_py.pivot

if not os.environ.get("HCONE_PURE_PYTHON"):
    try:
        from . import pivot_ext
    except ImportError:
        pass
    else:
        pivot = pivot_ext.pivot
        IMPLEMENTATION = "cython"

__all__ = ["pivot", "pivot_py", "IMPLEMENTATION"]
