"""Backend switch for the compiled kernels.

Set ``LEGQUARTIC_NO_JIT=1`` to skip numba and run the pure-numpy kernels
instead; the numpy path is also used automatically when numba is missing.
"""

import os

NUMBA_REQUESTED = os.environ.get("LEGQUARTIC_NO_JIT", "0").strip().lower() in ("", "0", "false", "no")

try:
    if not NUMBA_REQUESTED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper


BACKEND = "numba" if HAVE_NUMBA else "numpy"
