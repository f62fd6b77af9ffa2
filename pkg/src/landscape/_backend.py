"""Kernel selection.

The compiled extension is used when it imports; otherwise the numpy kernels.
Set LANDSCAPE_BACKEND=python to force the fallback, or =cython to make a
missing extension an import error.
"""

import contextlib
import os

from . import _pykernels

try:
    from . import _kernels as _cykernels
except ImportError:  # extension not built
    _cykernels = None

_AVAILABLE = {"python": _pykernels}
if _cykernels is not None:
    _AVAILABLE["cython"] = _cykernels

_requested = os.environ.get("LANDSCAPE_BACKEND", "auto").lower()
if _requested == "auto":
    name = "cython" if _cykernels is not None else "python"
elif _requested in _AVAILABLE:
    name = _requested
else:
    raise ImportError(f"LANDSCAPE_BACKEND={_requested!r} is not available; have {sorted(_AVAILABLE)}")

kernels = _AVAILABLE[name]


def available() -> list[str]:
    return sorted(_AVAILABLE)


def set_backend(which: str) -> None:
    global kernels, name
    if which == "auto":
        which = "cython" if "cython" in _AVAILABLE else "python"
    if which not in _AVAILABLE:
        raise ValueError(f"backend {which!r} not available; have {available()}")
    kernels = _AVAILABLE[which]
    name = which


@contextlib.contextmanager
def using(which: str):
    previous = name
    set_backend(which)
    try:
        yield kernels
    finally:
        set_backend(previous)
