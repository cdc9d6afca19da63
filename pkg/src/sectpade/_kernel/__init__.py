"""Kernel backend selection.

The compiled extension is preferred when it was built; set
``SECTPADE_PURE=1`` to force the pure-Python kernels (used by the
benchmark and by tests that compare the two backends).
"""

import os

from sectpade._kernel import pure

_impl = pure
if os.environ.get("SECTPADE_PURE") != "1":
    try:
        from sectpade._kernel import _speedups as _impl
    except ImportError:
        pass

BACKEND = "pure" if _impl is pure else "compiled"
series_mul = _impl.series_mul
series_div = _impl.series_div


def backend_name():
    """Which kernel implementation is active: 'compiled' or 'pure'."""
    return BACKEND
