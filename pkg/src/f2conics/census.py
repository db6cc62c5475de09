"""Exact census ``N(B) = #{y : H(y) = B, C_y(K) != {}}`` by exhaustive enumeration."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from . import kernel
from .funcfield import enumerate_by_height
from .symbol import globally_soluble

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "CensusRow",
    "census",
    "census_range",
    "census_reference",
    "slices",
    "expected_pairs",
]

DEFAULT_CAP = 14


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    M: int
    total: int
    soluble: int
    elapsed: float = 0.0
    visited: int = 0

    def __post_init__(self):
        if not 0 <= self.soluble <= self.total:
            raise ValueError(f"inconsistent census row {self}")

    def as_dict(self):
        return asdict(self)


def expected_pairs(M):
    """Candidate ``(num, den)`` pairs with ``max(deg) = M``: ``3 * 4^M - 2^M``."""
    return 3 * 4 ** M - 2 ** M


def slices(M, parts):
    """Split denominators ``1 <= d < 2^(M+1)`` into ranges by leading bits.

    ``parts`` is rounded down to a power of two so that every range is a
    fixed bit-prefix of a fixed width.
    """
    if parts < 1:
        raise ValueError("need at least one slice")
    top = 1 << (M + 1)
    width = min(parts.bit_length() - 1, M + 1)
    step = top >> width
    return [(max(i * step, 1), (i + 1) * step) for i in range(1 << width)]


def _run_slice(job):
    M, lo, hi, backend = job
    return kernel.census_slice(M, lo, hi, backend)


def _check_cap(M, cap):
    if M < 0:
        raise ValueError("log-height M must be nonnegative")
    if cap is not None and M > cap:
        raise CapExceededError(f"M = {M} exceeds the census cap {cap}")


def census(M, *, cap=DEFAULT_CAP, parts=1, mapper=map, backend=None):
    """Census row for ``H(y) = 2^M``.

    ``mapper`` is any ``map``-like callable; pass an executor's ``map`` to
    spread the ``parts`` slices over workers.  The result does not depend on
    how the work is split.
    """
    _check_cap(M, cap)
    t0 = time.perf_counter()
    jobs = [(M, lo, hi, backend) for lo, hi in slices(M, parts)]
    total = soluble = visited = 0
    for tot, sol, vis in mapper(_run_slice, jobs):
        total += tot
        soluble += sol
        visited += vis
    return CensusRow(M, total, soluble, time.perf_counter() - t0, visited)


def census_reference(M, *, cap=8):
    """Slow census straight from ``enumerate_by_height`` and ``globally_soluble``."""
    _check_cap(M, cap)
    t0 = time.perf_counter()
    total = soluble = 0
    for y in enumerate_by_height(M):
        total += 1
        soluble += globally_soluble(y)
    return CensusRow(M, total, soluble, time.perf_counter() - t0, expected_pairs(M))


def census_range(M_max, **kwargs):
    """Yield rows for ``M = 0..M_max`` as each one completes."""
    _check_cap(M_max, kwargs.get("cap", DEFAULT_CAP))
    for M in range(M_max + 1):
        yield census(M, **kwargs)
