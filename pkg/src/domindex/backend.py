"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the
pure-Python twin is used otherwise, or when ``DOMINDEX_BACKEND=py`` is
set, or for graphs wider than the 64-bit word the extension handles.
``DOMINDEX_BACKEND=c`` insists on the extension and fails loudly if it
is missing.
"""

from __future__ import annotations

import os

from . import _pykern

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

_choice = os.environ.get("DOMINDEX_BACKEND", "auto").strip().lower()
if _choice in ("", "auto"):
    _active = _kernels if _kernels is not None else _pykern
elif _choice in ("py", "python"):
    _active = _pykern
elif _choice in ("c", "ext", "compiled"):
    if _kernels is None:
        raise ImportError(
            "DOMINDEX_BACKEND=c requested but the compiled kernels are not built"
        )
    _active = _kernels
else:
    raise ValueError(f"unknown DOMINDEX_BACKEND value {_choice!r}")


def backend_name() -> str:
    return _active.BACKEND_NAME


def kernels_for(n: int):
    """Kernel module to use for an ``n``-vertex graph."""
    if n > 64:
        return _pykern
    return _active


def available_backends() -> dict[str, object]:
    out: dict[str, object] = {"python": _pykern}
    if _kernels is not None:
        out["compiled"] = _kernels
    return out
