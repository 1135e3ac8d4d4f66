"""Picks the compiled kernels when available, else the Python ones.

Set ``ARGDEC_PURE_PYTHON=1`` to force the Python implementation.
"""

import os

from . import _kernels_py as python_kernels

compiled_kernels = None
if not os.environ.get("ARGDEC_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

BACKEND = "compiled" if compiled_kernels is not None else "python"
_WORD = 64


def _pick(nbits):
    if compiled_kernels is not None and nbits <= _WORD:
        return compiled_kernels
    return python_kernels


def find_admissible(sup, att, start, nbits):
    return _pick(nbits).find_admissible(sup, att, start, nbits)


def enumerate_admissible(sup, att, nbits):
    return _pick(nbits).enumerate_admissible(sup, att, nbits)


def is_admissible(sup, att, s, nbits):
    return _pick(nbits).is_admissible(sup, att, s)


def set_attacks(sup, att, s1, s2, nbits):
    return _pick(nbits).set_attacks(sup, att, s1, s2)
