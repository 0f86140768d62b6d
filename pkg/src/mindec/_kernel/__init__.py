"""Backend selection for the exact rational kernels.

The compiled extension is preferred when present; the pure-Python twin
is a drop-in replacement.  Set ``MINDEC_KERNEL=py`` or ``=c`` to force
a backend (forcing ``c`` raises if the extension was not built).
"""

import os

_forced = os.environ.get("MINDEC_KERNEL", "").strip().lower()

if _forced in ("py", "python"):
    from mindec._kernel import _pykernel as _impl
elif _forced in ("c", "cython"):
    from mindec._kernel import _ckernel as _impl  # type: ignore[no-redef]
else:
    try:
        from mindec._kernel import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from mindec._kernel import _pykernel as _impl

BACKEND = _impl.BACKEND
poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod
mat_mul = _impl.mat_mul
rref = _impl.rref
