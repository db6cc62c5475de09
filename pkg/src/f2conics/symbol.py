"""Local symbol ``[y, t)_w`` and solubility of ``x0^2 + x0 x1 + y x1^2 = t x2^2``.

The symbol is computed by the residue formula at every place: it is the
trace to F_2 of the residue of the differential ``y dt/t``.  At a finite
place that residue is read off the expansion of ``y/t`` at a root of the
place polynomial; at infinity ``dt/t = ds/s`` (characteristic 2), so it is
the constant coefficient of ``y`` in ``s = 1/t``.
"""

from __future__ import annotations

import itertools

from .extfield import BASE_FIELD, ExtElem, expand_at, root_of_place, trace
from .funcfield import INFINITY, PLACE_T, RatFunc, _as_ratfunc, poles, valuation
from .gf2poly import _deg, _mul, _pow

__all__ = [
    "residue",
    "local_symbol",
    "locally_soluble",
    "globally_soluble",
    "relevant_places",
    "soluble_principal_parts",
    "predicted_principal_parts",
    "symbol_sum",
]

_T = RatFunc(0b10)


def residue(y, place, root=None):
    """Residue of ``y dt/t`` at a geometric point over ``place``.

    Returns an :class:`ExtElem` in the residue field of ``place`` (F_2 at
    infinity).  The symbol is its trace.
    """
    y = _as_ratfunc(y)
    if place.is_infinite:
        v = valuation(y, place)
        if v > 0:
            return ExtElem(BASE_FIELD, 0)
        return expand_at(y, place, v, 1)[0]
    z = y / _T
    v = valuation(z, place)
    alpha = root if root is not None else root_of_place(place)
    if v >= 0:
        return alpha.zero()
    return expand_at(z, place, v, 0, root=alpha)[-1]


def local_symbol(y, place, root=None):
    """``[y, t)_w`` as a bit: 0 iff the conic has a point over the completion."""
    return trace(residue(y, place, root))


def locally_soluble(y, place):
    y = _as_ratfunc(y)
    if place.is_infinite or place == PLACE_T:
        return local_symbol(y, place) == 0
    if valuation(y, place) >= 0:
        # good reduction away from t and 1/t
        return True
    return local_symbol(y, place) == 0


def relevant_places(y):
    """Places where solubility is not automatic, in the order they are checked."""
    y = _as_ratfunc(y)
    out = [PLACE_T, INFINITY]
    out.extend(p for p, _ in poles(y) if not p.is_infinite and p != PLACE_T)
    return out


def globally_soluble(y):
    """Whether ``C_y`` has a K-point (Hasse principle over the relevant places)."""
    return all(locally_soluble(y, p) for p in relevant_places(y))


def _check_principal_args(place, k):
    if place.is_infinite or place == PLACE_T:
        raise ValueError("principal-part measures are only defined away from t and 1/t")
    if k < 1:
        raise ValueError("pole order k must be positive")


def soluble_principal_parts(place, k):
    """``(count_soluble, count_total)`` over cosets ``p + O_w`` with ``v_w(p) = -k``.

    Representatives are ``sum_{j=1..k} c_j w^(-j)`` with ``deg c_j < deg w``
    and ``c_k != 0``.  Each coset has Haar measure 1, so the counts are the
    measures of soluble and of all elements of valuation ``-k``.
    """
    _check_principal_args(place, k)
    w = place.poly.bits
    d = _deg(w)
    den = _pow(w, k)
    powers = [_pow(w, k - j) for j in range(1, k + 1)]  # w^(k-j)
    soluble = total = 0
    digits = range(1 << d)
    for cs in itertools.product(digits, repeat=k):
        if cs[-1] == 0:
            continue
        num = 0
        for c, wp in zip(cs, powers):
            num ^= _mul(c, wp)
        total += 1
        if local_symbol(RatFunc(num, den), place) == 0:
            soluble += 1
    return soluble, total


def predicted_principal_parts(place, k):
    """Closed-form measures: ``2^(d-1) - 1`` for ``k = 1``, half the total otherwise."""
    _check_principal_args(place, k)
    d = place.degree
    total = 2 ** (k * d) - 2 ** ((k - 1) * d)
    soluble = 2 ** (d - 1) - 1 if k == 1 else total // 2
    return soluble, total


def symbol_sum(y):
    """Sum of the symbols over all places where one can be nonzero (mod 2)."""
    y = _as_ratfunc(y)
    places = relevant_places(y)
    return sum(local_symbol(y, p) for p in places) % 2

