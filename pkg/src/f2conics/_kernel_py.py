"""Pure-Python (numpy-vectorised) census kernel.

For a fixed denominator ``d`` every local symbol of ``n/d`` is an F_2-linear
function of the numerator ``n``, so it is ``parity(n & mask)`` for a bit mask
depending only on ``d``:

* at a finite place ``w != t`` with ``w^e || d``, write ``d = w^e m``; the
  traced residue of ``n/(t d) dt`` is bit ``e deg w - 1`` of
  ``n (t m)^-1 mod w^e`` (partial fractions, then the residue theorem for
  ``A/w^e dt`` whose only other pole is at infinity);
* at ``t`` with ``t^e || d``, ``d = t^e m``: bit ``e`` of ``n m^-1 mod t^(e+1)``;
* at infinity: the constant term of the polynomial quotient ``n // d``.

The compiled kernel implements the same arithmetic in C.
"""

from __future__ import annotations

import numpy as np

from .gf2poly import _deg, _divmod, _factor_bits, _inv_mod, _mod, _mul, _pow

__all__ = ["place_masks", "census_slice", "pair_count"]


def _functional_mask(c, modulus, bit, M):
    """Mask of ``n -> bit_k(n c mod P)`` on numerators of degree ``<= M``."""
    mask = 0
    r = _mod(c, modulus)
    top = modulus.bit_length()
    for i in range(M + 1):
        if (r >> bit) & 1:
            mask |= 1 << i
        r <<= 1
        if r.bit_length() == top:
            r ^= modulus
    return mask


def place_masks(d, M):
    """``(primes, masks)`` for denominator ``d``.

    ``masks`` is a list of ``(place_bits, mask)`` with ``place_bits = 0`` for
    infinity; ``primes`` are the prime factors of ``d`` (for coprimality).
    """
    factors = _factor_bits(d)
    masks = []
    et = 0
    for p, e in factors:
        if p == 0b10:
            et = e
    m = d >> et
    modulus = 1 << (et + 1)
    masks.append((0b10, _functional_mask(_inv_mod(m, modulus), modulus, et, M)))
    inf_mask = 0
    for i in range(_deg(d), M + 1):
        if _divmod(1 << i, d)[0] & 1:
            inf_mask |= 1 << i
    masks.append((0, inf_mask))
    for p, e in factors:
        if p == 0b10:
            continue
        pe = _pow(p, e)
        cofactor = _divmod(d, pe)[0]
        c = _inv_mod(_mul(0b10, cofactor), pe)
        masks.append((p, _functional_mask(c, pe, e * _deg(p) - 1, M)))
    return [p for p, _ in factors], masks


def pair_count(M, lo, hi):
    """Number of ``(n, d)`` pairs the kernels visit for ``lo <= d < hi``."""
    total = 0
    for d in range(max(lo, 1), min(hi, 1 << (M + 1))):
        total += (1 << (M + 1)) if _deg(d) == M else (1 << M)
    return total


def _clmul_vec(q, p):
    out = np.zeros_like(q)
    shift = 0
    while p:
        if p & 1:
            out ^= q << np.uint64(shift)
        p >>= 1
        shift += 1
    return out


def census_slice(M, lo, hi):
    """``(total, soluble, visited)`` over denominators ``lo <= d < hi``."""
    top = 1 << (M + 1)
    total = soluble = visited = 0
    for d in range(max(lo, 1), min(hi, top)):
        start = 0 if _deg(d) == M else 1 << M
        n = np.arange(start, top, dtype=np.uint64)
        primes, masks = place_masks(d, M)
        coprime = np.ones(n.shape, dtype=bool)
        if start == 0 and d != 1:
            coprime[0] = False
        for p in primes:
            q = np.arange(1, 1 << (M + 1 - _deg(p)), dtype=np.uint64)
            mult = _clmul_vec(q, p)
            mult = mult[mult >= start] - np.uint64(start)
            coprime[mult.astype(np.intp)] = False
        bad = np.zeros(n.shape, dtype=bool)
        for _, mask in masks:
            bad |= (np.bitwise_count(n & np.uint64(mask)) & 1).astype(bool)
        visited += n.size
        total += int(np.count_nonzero(coprime))
        soluble += int(np.count_nonzero(coprime & ~bad))
    return total, soluble, visited
