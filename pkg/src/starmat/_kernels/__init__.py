"""Hot kernels: the compiled Cython core when built, pure Python otherwise.

Set ``STARMAT_PURE_PYTHON=1`` to force the fallback.  ``IMPLEMENTATION``
names the module actually in use.
"""

import os

from . import _fallback

if os.environ.get("STARMAT_PURE_PYTHON"):
    _impl = _fallback
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _fallback

IMPLEMENTATION = "python" if _impl is _fallback else "compiled"

matmul_flat = _impl.matmul_flat
star_flat = _impl.star_flat
star2_flat = _impl.star2_flat
assoc2_exhaustive = _impl.assoc2_exhaustive


def compiled_module():
    """The compiled core, or ``None`` if it was not built."""
    try:
        from . import _core
    except ImportError:
        return None
    return _core
