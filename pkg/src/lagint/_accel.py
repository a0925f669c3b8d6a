"""Backend selection for the compiled special-function kernels.

The hot kernels are written once per backend: a numba ``@njit`` version
operating element-wise in compiled loops, and a vectorized pure-numpy twin.
Set ``LAGINT_DISABLE_NUMBA=1`` (or ``true``/``yes``) before import to force the
numpy path; the numpy path is also used automatically when numba is missing.
"""

from __future__ import annotations

import os

_FALSEY = {"", "0", "false", "no", "off"}


def _env_disables_numba() -> bool:
    return os.environ.get("LAGINT_DISABLE_NUMBA", "").strip().lower() not in _FALSEY


def _numba_importable() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:  # pragma: no cover - numba is a declared dependency
        return False
    return True


USE_NUMBA: bool = (not _env_disables_numba()) and _numba_importable()

NJIT_OPTIONS = {"cache": True, "nogil": True, "fastmath": False}


def njit(func):
    """Compile ``func`` with numba in nopython mode (import-time lazy)."""
    import numba

    return numba.njit(**NJIT_OPTIONS)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
