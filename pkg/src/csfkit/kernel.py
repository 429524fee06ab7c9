"""Backend selection for the enumeration core.

The compiled extension (csfkit._speedups) is used when it imported
cleanly; otherwise the pure-Python twin takes over.  Set
CSF_PURE_PYTHON=1 to force the fallback, e.g. to benchmark the two
against each other.
"""

from __future__ import annotations

import os

from . import _pykernel

_COMPILED = None
if not os.environ.get("CSF_PURE_PYTHON"):
    try:
        from . import _speedups as _COMPILED
    except ImportError:
        _COMPILED = None

_active = _COMPILED if _COMPILED is not None else _pykernel


def backend_name() -> str:
    return _active.BACKEND


def available_backends() -> list[str]:
    out = ["python"]
    if compiled_backend() is not None:
        out.insert(0, "compiled")
    return out


def compiled_backend():
    """The compiled module, or None when it is not importable."""
    global _COMPILED
    if _COMPILED is None:
        try:
            from . import _speedups

            _COMPILED = _speedups
        except ImportError:
            return None
    return _COMPILED


def get_backend(name: str = "auto"):
    """Resolve a backend by name: auto, compiled or python."""
    if name == "auto":
        return _active
    if name == "python":
        return _pykernel
    if name == "compiled":
        mod = compiled_backend()
        if mod is None:
            raise RuntimeError("compiled backend is not available")
        return mod
    raise ValueError("unknown backend %r" % (name,))


def coloring_table(hvec, k: int) -> dict:
    try:
        return _active.coloring_table(hvec, k)
    except MemoryError:
        # dense tally declined the size; the dict-based walk still works
        return _pykernel.coloring_table(hvec, k)


def count_colorings(hvec, k: int) -> int:
    return _active.count_colorings(hvec, k)
