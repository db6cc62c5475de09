"""Rational functions over F_2, places of F_2(t), valuations and heights."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf2poly import (
    BinaryPoly,
    PolyParseError,
    _deg,
    _divmod,
    _factor_bits,
    _gcd,
    _mul,
    format_poly,
    is_irreducible,
    parse_poly,
)

__all__ = [
    "RatFunc",
    "Place",
    "INFINITY",
    "valuation",
    "height",
    "log_height",
    "enumerate_by_height",
    "count_by_height",
    "poles",
    "parse_ratfunc",
    "parse_place",
]


class RatFunc:
    """Reduced fraction ``num/den`` in F_2(t).

    The unit group of F_2 is trivial, so dividing out the gcd already gives
    the unique normal form.  Zero is ``0/1``.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        n = num.bits if isinstance(num, BinaryPoly) else int(num)
        d = den.bits if isinstance(den, BinaryPoly) else int(den)
        if d == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        if n == 0:
            d = 1
        else:
            g = _gcd(n, d)
            if g != 1:
                n = _divmod(n, g)[0]
                d = _divmod(d, g)[0]
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)

    @classmethod
    def _raw(cls, n, d):
        # caller guarantees gcd(n, d) == 1
        obj = object.__new__(cls)
        object.__setattr__(obj, "_num", n)
        object.__setattr__(obj, "_den", d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def parse(cls, text):
        return parse_ratfunc(text)

    @property
    def num(self):
        return BinaryPoly(self._num)

    @property
    def den(self):
        return BinaryPoly(self._den)

    @property
    def num_bits(self):
        return self._num

    @property
    def den_bits(self):
        return self._den

    def __bool__(self):
        return self._num != 0

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self._num == other._num and self._den == other._den
        return NotImplemented

    def __hash__(self):
        return hash(("RatFunc", self._num, self._den))

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(_mul(self._num, other._den) ^ _mul(other._num, self._den),
                       _mul(self._den, other._den))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(_mul(self._num, other._num), _mul(self._den, other._den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if not other:
            raise ZeroDivisionError("division by zero in F_2(t)")
        return RatFunc(_mul(self._num, other._den), _mul(self._den, other._num))

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __pow__(self, e):
        if e < 0:
            return RatFunc(1) / self ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def __str__(self):
        if self._den == 1:
            return format_poly(self._num)
        num = format_poly(self._num)
        den = format_poly(self._den)
        if "+" in num:
            num = f"({num})"
        if "+" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({self})"


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (BinaryPoly, int)):
        return RatFunc(x)
    raise TypeError(f"cannot use {type(x).__name__} as an element of F_2(t)")


@dataclass(frozen=True)
class Place:
    """A place of F_2(t): a monic irreducible, or infinity when ``poly`` is None."""

    poly: BinaryPoly | None = None

    def __post_init__(self):
        if self.poly is not None:
            p = BinaryPoly(self.poly)
            if not is_irreducible(p):
                raise ValueError(f"{p} is not irreducible; not a finite place")
            object.__setattr__(self, "poly", p)

    @classmethod
    def finite(cls, poly):
        return cls(parse_poly(poly) if isinstance(poly, str) else BinaryPoly(poly))

    @classmethod
    def _trusted(cls, bits):
        obj = object.__new__(cls)
        object.__setattr__(obj, "poly", BinaryPoly(bits))
        return obj

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    def __lt__(self, other):
        # finite places by (degree, bits); infinity sorts after degree-1 places
        return self._key() < other._key()

    def _key(self):
        if self.poly is None:
            return (1, 1 << 2)
        return (self.poly.degree, self.poly.bits)

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)

    def __repr__(self):
        return f"Place({self})"


INFINITY = Place()
PLACE_T = Place._trusted(0b10)


def parse_ratfunc(text):
    """Parse ``"P/Q"`` (or a bare polynomial); parentheses are optional."""
    if isinstance(text, RatFunc):
        return text
    depth = 0
    split = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PolyParseError("unbalanced ')'", text, i)
        elif ch == "/" and depth == 0:
            if split is not None:
                raise PolyParseError("more than one '/'", text, i)
            split = i
    if depth:
        raise PolyParseError("unbalanced '('", text, len(text))
    if split is None:
        return RatFunc(_parse_part(text, text, 0))
    num = _parse_part(text, text[:split], 0)
    den = _parse_part(text, text[split + 1:], split + 1)
    if not den:
        raise PolyParseError("zero denominator", text, split + 1)
    return RatFunc(num, den)


def _parse_part(text, part, offset):
    s = part.strip()
    lead = offset + (part.index(s[0]) if s else 0)
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
        lead += 1
    try:
        return parse_poly(s)
    except PolyParseError as exc:
        message = str(exc).split(" at position")[0]
        raise PolyParseError(message, text, lead + exc.position) from None


def parse_place(text):
    if isinstance(text, Place):
        return text
    if text.strip().lower() in ("inf", "infinity", "1/t"):
        return INFINITY
    return Place.finite(parse_poly(text))


def _poly_valuation(a, p):
    if a == 0:
        return math.inf
    v = 0
    while True:
        q, r = _divmod(a, p)
        if r:
            return v
        a = q
        v += 1


def valuation(y, place):
    """Order of ``y`` at ``place``; ``math.inf`` for ``y = 0``."""
    y = _as_ratfunc(y)
    if not y:
        return math.inf
    if place.poly is None:
        return _deg(y.den_bits) - _deg(y.num_bits)
    p = place.poly.bits
    return _poly_valuation(y.num_bits, p) - _poly_valuation(y.den_bits, p)


def log_height(y):
    y = _as_ratfunc(y)
    if not y:
        return 0
    return max(_deg(y.num_bits), _deg(y.den_bits))


def height(y):
    """Naive height ``2^max(deg num, deg den)``; ``H(0) = 1``."""
    return 2 ** log_height(y)


def enumerate_by_height(M):
    """Yield every ``y`` with ``H(y) = 2^M`` exactly once.

    Outer loop over denominators by increasing bit pattern (hence by
    degree), inner loop over numerators.
    """
    if M < 0:
        raise ValueError("log-height must be nonnegative")
    top = 1 << (M + 1)
    for d in range(1, top):
        n_start = 0 if _deg(d) == M else 1 << M
        for n in range(n_start, top):
            if _gcd(n, d) == 1:
                yield RatFunc._raw(n, d)


def count_by_height(M):
    """``#{y : H(y) = 2^M}`` by inclusion-exclusion over common factors.

    Pairs ``(n, d)`` with ``d != 0`` and both degrees ``<= m`` number
    ``2^(m+1) (2^(m+1) - 1)``; those with a gcd of degree ``k`` are
    ``2^k`` times the coprime pairs of size ``m - k``.
    """
    if M < 0:
        raise ValueError("log-height must be nonnegative")
    coprime = []
    for m in range(M + 1):
        pairs = 2 ** (m + 1) * (2 ** (m + 1) - 1)
        coprime.append(pairs - sum(2 ** k * coprime[m - k] for k in range(1, m + 1)))
    return coprime[M] - (coprime[M - 1] if M else 0)


def poles(y):
    """Places where ``y`` has a pole, with pole orders, by increasing degree."""
    y = _as_ratfunc(y)
    out = [(Place._trusted(p), e) for p, e in _factor_bits(y.den_bits)] if y.den_bits != 1 else []
    if y and _deg(y.num_bits) > _deg(y.den_bits):
        out.append((INFINITY, _deg(y.num_bits) - _deg(y.den_bits)))
    out.sort(key=lambda pe: pe[0]._key())
    return out


def zeros(y):
    """Places where ``y`` vanishes, with orders (used by the product formula)."""
    y = _as_ratfunc(y)
    if not y:
        raise ValueError("zero has a zero of infinite order everywhere")
    out = [(Place._trusted(p), e) for p, e in _factor_bits(y.num_bits)] if y.num_bits != 1 else []
    if _deg(y.num_bits) < _deg(y.den_bits):
        out.append((INFINITY, _deg(y.den_bits) - _deg(y.num_bits)))
    return out

