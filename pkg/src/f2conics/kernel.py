"""Census kernel selection.

The compiled extension is used when it imports; otherwise the numpy
fallback.  ``F2CONICS_KERNEL=python`` forces the fallback.
"""

from __future__ import annotations

import functools
import os

import numpy as np

from . import _kernel_py
from .gf2poly import _irreducible_bits

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

__all__ = ["BACKEND", "available_backends", "census_slice", "place_masks", "pair_count"]

place_masks = _kernel_py.place_masks
pair_count = _kernel_py.pair_count


def available_backends():
    return ["cython", "python"] if _compiled is not None else ["python"]


def _default_backend():
    forced = os.environ.get("F2CONICS_KERNEL", "").strip().lower()
    if forced:
        if forced not in available_backends():
            raise RuntimeError(f"F2CONICS_KERNEL={forced!r} is not available")
        return forced
    return available_backends()[0]


BACKEND = _default_backend()


@functools.lru_cache(maxsize=None)
def _trial_divisors(M):
    bits = [p for d in range(1, M // 2 + 1) for p in _irreducible_bits(d)]
    arr = np.array(bits, dtype=np.uint64)
    arr.setflags(write=False)
    return arr


def census_slice(M, lo, hi, backend=None):
    """``(total, soluble, visited)`` for denominators ``lo <= d < hi``."""
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled.census_slice(M, lo, hi, _trial_divisors(M))
    if backend == "python":
        return _kernel_py.census_slice(M, lo, hi)
    raise ValueError(f"unknown kernel backend {backend!r}")
