"""Hot numerical kernels: compiled core with a pure-numpy fallback.

The Cython extension is used when importable; otherwise the numpy reference
implementation takes over transparently. Set ACCENTID_KERNELS=python or
ACCENTID_KERNELS=native to force a backend (the latter raises if the
extension was not built).
"""

from __future__ import annotations

import os

from . import pyref

_requested = os.environ.get("ACCENTID_KERNELS", "").strip().lower()

if _requested == "python":
    _impl = pyref
elif _requested == "native":
    from . import _native as _impl  # type: ignore[no-redef]
elif _requested:
    raise ImportError(f"unknown ACCENTID_KERNELS backend {_requested!r}")
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pyref

BACKEND = "python" if _impl is pyref else "native"

smo_solve = _impl.smo_solve
levinson_batch = _impl.levinson_batch


def available_backends() -> dict[str, object]:
    """Importable backends by name, for tests and benchmarks."""
    backends: dict[str, object] = {"python": pyref}
    try:
        from . import _native

        backends["native"] = _native
    except ImportError:
        pass
    return backends
