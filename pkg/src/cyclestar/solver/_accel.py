"""JIT switch for the search kernels.

Set ``CYCLESTAR_DISABLE_NUMBA=1`` before import to run every kernel as plain
Python over numpy arrays (useful for debugging and for the benchmark).
"""
import os

_FLAG = os.environ.get("CYCLESTAR_DISABLE_NUMBA", "").strip().lower()
USE_NUMBA = _FLAG not in ("1", "true", "yes", "on")

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def maybe_njit(fn):
    """``numba.njit`` when enabled, identity otherwise. ``.py_func`` is always set."""
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn
