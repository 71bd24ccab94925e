"""Hot-kernel backend selection.

The compiled Cython core is preferred when present; the pure-numpy
fallback is selected otherwise, or when ``HYBRIDINTEL_PURE_PYTHON`` is a
non-empty value other than ``0``. Both backends are bit-for-bit
equivalent (see ``_pyref``), so the choice only affects speed.
"""

from __future__ import annotations

import os

from . import _pyref

_force_pure = os.environ.get("HYBRIDINTEL_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _pyref
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pyref

BACKEND = _impl.BACKEND_NAME
best_split = _impl.best_split
apply_tree = _impl.apply_tree

__all__ = ["BACKEND", "apply_tree", "best_split"]
