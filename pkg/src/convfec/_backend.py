"""Kernel backend selection.

Hot numeric loops (field-table elimination, minor-enumeration searches,
channel scans) run through numba ``@njit`` kernels by default.  Setting
``CONVFEC_BACKEND=numpy`` selects the pure-NumPy/Python fallback path;
``CONVFEC_BACKEND=numba`` forces numba and fails loudly if it is missing.
"""

import os

_env = os.environ.get("CONVFEC_BACKEND", "").strip().lower()

try:
    from numba import njit  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

if _env == "numpy":
    USE_NUMBA = False
elif _env == "numba":
    if not HAVE_NUMBA:
        raise ImportError("CONVFEC_BACKEND=numba but numba is not importable")
    USE_NUMBA = True
elif _env in ("", "auto"):
    USE_NUMBA = HAVE_NUMBA
else:
    raise ValueError(f"CONVFEC_BACKEND must be 'numba' or 'numpy', got {_env!r}")


def backend_name():
    return "numba" if USE_NUMBA else "numpy"


def jit(func):
    """Compile ``func`` with numba when the numba backend is active."""
    if USE_NUMBA:
        from numba import njit

        return njit(cache=True)(func)
    return func
