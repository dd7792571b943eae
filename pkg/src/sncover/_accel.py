"""Optional numba acceleration.

Hot kernels are written once in a numba-compatible subset of Python/numpy and
decorated with :func:`njit`. Set ``SNCOVER_DISABLE_NUMBA=1`` to run the same
kernels as plain Python (useful for debugging and for the benchmark).
"""

import os


def _disabled_from_env() -> bool:
    return os.environ.get("SNCOVER_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


_DISABLED = _disabled_from_env()

try:
    if _DISABLED:
        raise ImportError("disabled by SNCOVER_DISABLE_NUMBA")
    import numba as _numba
except ImportError:
    _numba = None

USE_NUMBA = _numba is not None


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise a no-op decorator."""
    if USE_NUMBA:
        kwargs.setdefault("cache", True)
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def decorator(func):
        return func

    return decorator


def backend_name():
    return "numba" if USE_NUMBA else "python"
