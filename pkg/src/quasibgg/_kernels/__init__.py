"""Hot arithmetic kernels.

The compiled Cython module is used when it has been built; otherwise the
pure-Python implementation is loaded.  Setting ``QBGG_PURE_PYTHON=1``
forces the fallback.  Both expose the same functions.
"""

import os

from . import _pykernels as pykernels

try:
    if os.environ.get("QBGG_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = pykernels
    ckernels = None
else:
    ckernels = _impl

BACKEND = _impl.BACKEND
mul = _impl.mul
mul_trunc = _impl.mul_trunc
geom_mul = _impl.geom_mul
add_scaled = _impl.add_scaled
lmul = _impl.lmul
poly_divmod = _impl.poly_divmod

__all__ = [
    "BACKEND",
    "add_scaled",
    "ckernels",
    "geom_mul",
    "lmul",
    "mul",
    "mul_trunc",
    "poly_divmod",
    "pykernels",
]
