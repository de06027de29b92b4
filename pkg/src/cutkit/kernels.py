"""Kernel backend selection.

The compiled extension is used when importable; ``CUTKIT_PURE=1`` forces the
numpy fallback.  :func:`load` returns either module explicitly, for tests and
benchmarks that compare the two.
"""
import importlib
import os

from . import _kernels_py


def load(name: str = "auto"):
    if name == "python":
        return _kernels_py
    if name == "compiled":
        return importlib.import_module("cutkit._kernels")
    if os.environ.get("CUTKIT_PURE", "") not in ("", "0"):
        return _kernels_py
    try:
        return importlib.import_module("cutkit._kernels")
    except ImportError:
        return _kernels_py


def compiled_available() -> bool:
    try:
        importlib.import_module("cutkit._kernels")
    except ImportError:
        return False
    return True


active = load()
BACKEND = active.BACKEND
