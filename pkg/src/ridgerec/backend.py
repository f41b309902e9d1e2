"""Numeric backend selection.

The hot loops (pairwise kernel distances, SGD epochs, dense prediction
grids) have two interchangeable implementations: numba-compiled kernels
and pure-NumPy fallbacks. The ``RIDGEREC_BACKEND`` environment variable
selects one (``numba`` or ``numpy``); when unset, numba is used if it is
importable.
"""

import os
from contextlib import contextmanager

ENV_VAR = "RIDGEREC_BACKEND"

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def active_backend() -> str:
    """Resolve the backend name ("numba" or "numpy") for the current call."""
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if not choice:
        return "numba" if HAVE_NUMBA else "numpy"
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError(f"{ENV_VAR}=numba requested but numba is not importable.")
        return "numba"
    raise ValueError(f"unknown backend {choice!r}; expected 'numba' or 'numpy'.")


@contextmanager
def use_backend(name: str):
    """Temporarily force a backend; used by tests and the comparison benchmark."""
    previous = os.environ.get(ENV_VAR)
    os.environ[ENV_VAR] = name
    try:
        yield
    finally:
        if previous is None:
            os.environ.pop(ENV_VAR, None)
        else:
            os.environ[ENV_VAR] = previous
