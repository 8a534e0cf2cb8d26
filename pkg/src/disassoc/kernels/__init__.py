"""Support-counting kernels with a selectable backend.

The backend is picked once at import time from the DISASSOC_BACKEND
environment variable:

    auto   (default) numba when importable, else the pure-numpy fallback
    numba  require the compiled kernels
    numpy  force the pure-numpy fallback

Call sites look the functions up through this module (kernels.itemset_support
and friends), so `set_backend` also works at runtime, which the benchmark
uses to compare both implementations in one process.
"""

import logging
import os

from . import _numpy_impl

_log = logging.getLogger(__name__)

_BACKENDS = {"numpy": _numpy_impl}
try:
    from . import _numba_impl

    _BACKENDS["numba"] = _numba_impl
except ImportError:  # pragma: no cover - numba is a declared dependency
    _log.warning("numba unavailable; falling back to pure-numpy kernels")

_KERNEL_NAMES = ("column_supports", "cooccurrence", "itemset_support", "conditional_pair_counts")

active_backend = ""


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def get_backend(name: str):
    """Return the backend module for `name` without changing the default."""
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        ) from None


def set_backend(name: str) -> str:
    """Bind this module's kernel functions to the named backend."""
    global active_backend
    mod = get_backend(name)
    for fn in _KERNEL_NAMES:
        globals()[fn] = getattr(mod, fn)
    active_backend = name
    return name


def _initial_backend() -> str:
    env = os.environ.get("DISASSOC_BACKEND", "auto").strip().lower()
    if env in ("", "auto"):
        return "numba" if "numba" in _BACKENDS else "numpy"
    if env not in _BACKENDS:
        raise ValueError(
            f"DISASSOC_BACKEND={env!r} is not a valid backend; "
            f"choose one of {available_backends()} or 'auto'"
        )
    return env


set_backend(_initial_backend())
