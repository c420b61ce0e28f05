"""Kernel selection.

Uses the compiled ``_ckernels`` extension when it is importable, otherwise
the pure-Python ``_pykernels``.  Set ``HECKEQ_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("HECKEQ_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

conv = _impl.conv
inv_unit = _impl.inv_unit
geom_div = _impl.geom_div
shift_axpy = _impl.shift_axpy

__all__ = ["BACKEND", "conv", "inv_unit", "geom_div", "shift_axpy"]
