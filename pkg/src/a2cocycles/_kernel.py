"""Backend selection for the cyclotomic hot loops.

The compiled extension is used when it has been built; setting
``A2COCYCLES_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os

BACKEND = "python"

if os.environ.get("A2COCYCLES_PURE_PYTHON", "") in ("", "0"):
    try:
        from a2cocycles import _ckernel as impl

        BACKEND = "cython"
    except ImportError:
        from a2cocycles import _pykernel as impl
else:
    from a2cocycles import _pykernel as impl

normalize = impl.normalize
add = impl.add
sub = impl.sub
mul = impl.mul
dot = impl.dot
