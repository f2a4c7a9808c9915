"""JIT plumbing: numba kernels by default, interpreted fallback on demand.

Setting the environment variable CHORDCRIT_NO_JIT=1 (before import) disables
numba entirely; hot kernels then run through their pure numpy / pure Python
paths.  `benchmarks/bench_kernels.py` compares the two.
"""

import os

NO_JIT_ENV = "CHORDCRIT_NO_JIT"


def _jit_requested() -> bool:
    flag = os.environ.get(NO_JIT_ENV, "").strip().lower()
    return flag not in ("1", "true", "yes", "on")


JIT_ENABLED = False

if _jit_requested():
    try:
        from numba import njit, prange  # noqa: F401

        JIT_ENABLED = True
    except ImportError:
        JIT_ENABLED = False

if not JIT_ENABLED:
    # Passthrough decorator: the decorated function runs interpreted.
    def njit(*args, **kwargs):  # noqa: ANN001
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap

    prange = range


def jit_active() -> bool:
    """True when kernels are numba-compiled in this process."""
    return JIT_ENABLED
