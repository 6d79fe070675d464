"""Arithmetic kernel selection.

The compiled extension is used when it was built; otherwise the pure-Python
module with identical semantics is imported.  Setting ``CONCHOIDAL_PURE=1``
forces the fallback (useful for benchmarking and debugging).
"""

import os

if os.environ.get("CONCHOIDAL_PURE", "") not in ("", "0"):
    from ._pykernel import ZERO8, add, mul, normalize, poly_mul, sub
    BACKEND = "python"
else:
    try:
        from ._ckernel import ZERO8, add, mul, normalize, poly_mul, sub
        BACKEND = "cython"
    except ImportError:
        from ._pykernel import ZERO8, add, mul, normalize, poly_mul, sub
        BACKEND = "python"

__all__ = ["BACKEND", "ZERO8", "add", "mul", "normalize", "poly_mul", "sub"]
