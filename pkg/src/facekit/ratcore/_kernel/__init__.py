"""Kernel selection: compiled simplex when available, pure Python otherwise.

Set FACEKIT_PURE_PYTHON=1 to force the pure-Python kernel regardless of
whether the compiled extension is importable. Tests and benchmarks can
also switch at runtime via set_backend().
"""

from __future__ import annotations

import os

from . import simplex_py

_BACKENDS = {"python": simplex_py}
_active = "python"

if not os.environ.get("FACEKIT_PURE_PYTHON"):
    try:
        from . import _simplex_cy  # type: ignore[attr-defined]

        _BACKENDS["compiled"] = _simplex_cy
        _active = "compiled"
    except ImportError:
        pass


def kernel_backend() -> str:
    """Name of the active kernel: 'compiled' or 'python'."""
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def set_backend(name: str) -> None:
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_BACKENDS)}")
    global _active
    _active = name


def phase1(rows, rhs):
    return _BACKENDS[_active].phase1(rows, rhs)
