"""Backend selection for the exponent-vector kernels.

The compiled module is used when it was built; otherwise the pure-Python
reference takes over. Set ``VNUMBERS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("VNUMBERS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
minimize = _impl.minimize
product = _impl.product
contains = _impl.contains
colon_monomial = _impl.colon_monomial
intersect = _impl.intersect
witness_scan = _impl.witness_scan
grlex_key = _kernels_py.grlex_key

BACKENDS = {"python": _kernels_py}
try:
    from . import _ckernels

    BACKENDS["cython"] = _ckernels
except ImportError:
    pass
