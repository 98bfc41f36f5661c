"""Selects the compiled kernels when available, with a pure-Python fallback.

The compiled module covers inputs whose values fit comfortably in 64 bits
and raises OverflowError otherwise; the dispatcher then redoes the call on
the arbitrary-precision pure path, so results are exact in every case.
Set ``AFFWEIGHTS_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernel

try:
    from . import _core
except ImportError:
    _core = None

_active = None if os.environ.get("AFFWEIGHTS_PURE") else _core

BACKEND = "compiled" if _active is not None else "pure-python"


def hub(a_flat, lam, b):
    """theta with theta_i = lam_i - (A @ b)_i, as a tuple."""
    if _active is not None:
        try:
            return _active.hub(a_flat, lam, b)
        except OverflowError:
            pass
    return _pykernel.hub(a_flat, lam, b)


def dominant_reduce(a_flat, lam, b, want_word=False):
    """Reflect at the first negative hub entry until dominant.

    Returns (content, word); word is None unless requested.  Terminates for
    every weight of positive level.
    """
    if _active is not None:
        try:
            return _active.dominant_reduce(a_flat, lam, b, want_word)
        except OverflowError:
            pass
    return _pykernel.dominant_reduce(a_flat, lam, b, want_word)
