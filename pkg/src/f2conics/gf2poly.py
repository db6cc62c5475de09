"""Arithmetic in F_2[t] on dense bitsets.

A polynomial is stored as a nonnegative Python int: bit ``i`` is the
coefficient of ``t^i``.  The module-level ``_``-prefixed helpers work on raw
ints and are what the hot paths use; :class:`BinaryPoly` wraps them with
operators, parsing and printing.
"""

from __future__ import annotations

import functools
import re

__all__ = [
    "BinaryPoly",
    "PolyParseError",
    "add",
    "mul",
    "divmod_",
    "gcd",
    "derivative",
    "irreducibles",
    "count_irreducibles",
    "is_irreducible",
    "factor",
    "parse_poly",
]


class PolyParseError(ValueError):
    """Malformed polynomial text; ``position`` is the offending index."""

    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


# -- raw int helpers ---------------------------------------------------------

def _deg(a):
    """Degree of a nonzero bitset; -1 for zero (internal use only)."""
    return a.bit_length() - 1


def _mul(a, b):
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _inv_mod(a, m):
    """Inverse of ``a`` modulo ``m``; raises if they share a factor."""
    r0, r1 = m, _mod(a, m)
    s0, s1 = 0, 1
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _mul(q, s1)
    if r0 != 1:
        raise ZeroDivisionError("polynomial is not invertible modulo m")
    return _mod(s0, m)


def _mulmod(a, b, m):
    return _mod(_mul(a, b), m)


def _powmod(a, e, m):
    result = 1
    a = _mod(a, m)
    while e:
        if e & 1:
            result = _mulmod(result, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return _mod(result, m)


def _pow(a, e):
    result = 1
    while e:
        if e & 1:
            result = _mul(result, a)
        a = _mul(a, a)
        e >>= 1
    return result


def _derivative(a):
    # odd-degree terms t^(2k+1) differentiate to t^(2k); even ones vanish
    return (a >> 1) & int("01" * ((a.bit_length() + 1) // 2 + 1), 2) if a else 0


# -- the value type ------------------------------------------------------------

class BinaryPoly:
    """Immutable element of F_2[t]."""

    __slots__ = ("_bits",)

    def __init__(self, bits=0):
        if isinstance(bits, BinaryPoly):
            bits = bits._bits
        if not isinstance(bits, int) or bits < 0:
            raise TypeError(f"expected a nonnegative int bit mask, got {bits!r}")
        object.__setattr__(self, "_bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryPoly is immutable")

    @classmethod
    def parse(cls, text):
        return parse_poly(text)

    @property
    def bits(self):
        return self._bits

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return self._bits.bit_length() - 1 if self._bits else None

    def is_zero(self):
        return self._bits == 0

    def __bool__(self):
        return self._bits != 0

    def __int__(self):
        return self._bits

    def __index__(self):
        return self._bits

    def __eq__(self, other):
        if isinstance(other, BinaryPoly):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self):
        return hash(("BinaryPoly", self._bits))

    def __lt__(self, other):
        # degree first, then bit pattern; matches integer order
        return self._bits < _coerce(other)._bits

    def __add__(self, other):
        return BinaryPoly(self._bits ^ _coerce(other)._bits)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return BinaryPoly(_mul(self._bits, _coerce(other)._bits))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = _divmod(self._bits, _coerce(other)._bits)
        return BinaryPoly(q), BinaryPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return BinaryPoly(_mod(self._bits, _coerce(other)._bits))

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        return BinaryPoly(_pow(self._bits, e))

    def __repr__(self):
        return f"BinaryPoly({self})"

    def __str__(self):
        return format_poly(self._bits)

    def hex(self):
        return hex(self._bits)


def _coerce(p):
    if isinstance(p, BinaryPoly):
        return p
    if isinstance(p, int):
        return BinaryPoly(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial over F_2")


T = BinaryPoly(0b10)
ONE = BinaryPoly(1)
ZERO = BinaryPoly(0)


# -- text forms ----------------------------------------------------------------

_TERM = re.compile(r"\s*(?:(1)|t(?:\s*\^\s*(\d+))?)\s*")


def format_poly(bits, var="t"):
    if bits == 0:
        return "0"
    terms = []
    for i in range(bits.bit_length() - 1, -1, -1):
        if (bits >> i) & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return "+".join(terms)


def parse_poly(text):
    """Parse caret syntax (``"t^3+t+1"``) or a hex mask (``"0xB"``)."""
    if isinstance(text, BinaryPoly):
        return text
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial", text, 0)
    offset = text.index(s[0])
    if s.lower().startswith("0x"):
        try:
            return BinaryPoly(int(s, 16))
        except ValueError:
            raise PolyParseError("bad hex digit", text, offset + 2) from None
    if s == "0":
        return ZERO
    bits = 0
    pos = 0
    while True:
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise PolyParseError("expected a term '1', 't' or 't^k'", text, offset + pos)
        exp = 0 if m.group(1) else int(m.group(2) or 1)
        bits ^= 1 << exp
        pos = m.end()
        if pos == len(s):
            return BinaryPoly(bits)
        if s[pos] != "+":
            raise PolyParseError("expected '+'", text, offset + pos)
        pos += 1


# -- operations ----------------------------------------------------------------

def add(p, q):
    return _coerce(p) + _coerce(q)


def mul(p, q):
    return _coerce(p) * _coerce(q)


def divmod_(p, q):
    return divmod(_coerce(p), _coerce(q))


def gcd(p, q):
    p, q = _coerce(p), _coerce(q)
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    return BinaryPoly(_gcd(p.bits, q.bits))


def derivative(p):
    return BinaryPoly(_derivative(_coerce(p).bits))


def is_irreducible(p):
    """Ben-Or test: no common factor with t^(2^e) - t for e <= deg/2."""
    a = _coerce(p).bits
    d = _deg(a)
    if d < 1:
        return False
    x = 0b10
    power = x
    for _ in range(d // 2):
        power = _mulmod(power, power, a)
        if _gcd(a, power ^ x) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _irreducible_bits(d):
    if d == 1:
        return (0b10, 0b11)
    small = [p for e in range(1, d // 2 + 1) for p in _irreducible_bits(e)]
    out = []
    for a in range(1 << d, 1 << (d + 1)):
        if not (a & 1):
            continue  # divisible by t
        for p in small:
            if _mod(a, p) == 0:
                break
        else:
            out.append(a)
    return tuple(out)


def irreducibles(d):
    """All monic irreducibles of degree exactly ``d``, in increasing bit order."""
    if d < 1:
        raise ValueError("degree must be positive")
    return [BinaryPoly(a) for a in _irreducible_bits(d)]


def _mobius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def count_irreducibles(d):
    """Number of monic irreducibles of degree ``d`` (necklace formula)."""
    if d < 1:
        raise ValueError("degree must be positive")
    total = sum(_mobius(e) * 2 ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


def _factor_bits(a):
    out = []
    for d in range(1, _deg(a) // 2 + 1):
        if 2 * d > _deg(a):
            break
        for p in _irreducible_bits(d):
            e = 0
            while True:
                q, r = _divmod(a, p)
                if r:
                    break
                a = q
                e += 1
            if e:
                out.append((p, e))
            if 2 * d > _deg(a):
                break
    if _deg(a) >= 1:
        # whatever survives trial division up to half its degree is prime
        out.append((a, 1))
    out.sort(key=lambda pe: pe[0])
    return out


def factor(p):
    """Factorization into irreducibles as ``[(prime, multiplicity), ...]``."""
    a = _coerce(p).bits
    if a == 0:
        raise ValueError("cannot factor the zero polynomial")
    return [(BinaryPoly(q), e) for q, e in _factor_bits(a)]
