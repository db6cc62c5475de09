"""Residue fields F_{2^d} and Laurent expansions at a point of P^1.

Expansions are geometric: at a finite place ``w`` of degree ``d`` we pick a
root ``alpha`` of ``w`` in ``F_2[x]/(w)`` and expand in ``t - alpha`` with
coefficients in that field.  At infinity the parameter is ``s = 1/t`` and the
coefficients lie in F_2, modelled as ``F_2[x]/(x + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .funcfield import _as_ratfunc, valuation
from .gf2poly import _deg, _inv_mod, _mod, _mulmod, format_poly

__all__ = [
    "ExtElem",
    "LaurentSeries",
    "PrecisionError",
    "trace",
    "root_of_place",
    "expand_at",
    "BASE_FIELD",
]

#: modulus used for the prime field F_2 (expansions at infinity)
BASE_FIELD = 0b11


class PrecisionError(ValueError):
    """A coefficient was requested outside the window a series is known on."""


@dataclass(frozen=True)
class ExtElem:
    """Element ``rep mod modulus`` of ``F_2[x]/(modulus)``."""

    modulus: int
    rep: int

    def __post_init__(self):
        if _deg(self.rep) >= _deg(self.modulus):
            object.__setattr__(self, "rep", _mod(self.rep, self.modulus))

    @property
    def degree(self):
        return _deg(self.modulus)

    def _check(self, other):
        if not isinstance(other, ExtElem):
            raise TypeError(f"expected ExtElem, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ValueError(
                f"mixed residue fields: {format_poly(self.modulus, 'x')} "
                f"vs {format_poly(other.modulus, 'x')}")

    def __add__(self, other):
        self._check(other)
        return ExtElem(self.modulus, self.rep ^ other.rep)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        self._check(other)
        return ExtElem(self.modulus, _mulmod(self.rep, other.rep, self.modulus))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.rep == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        return ExtElem(self.modulus, _inv_mod(self.rep, self.modulus))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def frobenius(self):
        return self * self

    def one(self):
        return ExtElem(self.modulus, 1)

    def zero(self):
        return ExtElem(self.modulus, 0)

    def __bool__(self):
        return self.rep != 0

    def __str__(self):
        return format_poly(self.rep, "x")


def trace(x):
    """Absolute trace ``sum_i x^(2^i)`` down to F_2, as an int bit."""
    acc = x
    y = x
    for _ in range(x.degree - 1):
        y = y * y
        acc = acc + y
    if acc.rep not in (0, 1):
        raise ArithmeticError("trace did not land in F_2")
    return acc.rep


def root_of_place(place):
    """The class of ``x`` in ``F_2[x]/(w)``: a root of the place polynomial."""
    if place.is_infinite:
        raise ValueError("the infinite place has no finite root")
    m = place.poly.bits
    return ExtElem(m, 0b10)


class LaurentSeries:
    """Truncated Laurent series ``sum_{k >= start} c_k u^k`` known below ``precision``.

    ``coeffs[i]`` is the coefficient of ``u^(start + i)``; every exponent
    below ``start`` has coefficient zero, and exponents ``>= precision`` are
    unknown.
    """

    __slots__ = ("field", "start", "coeffs", "precision", "param")

    def __init__(self, field, start, coeffs, precision, param="u"):
        coeffs = list(coeffs)
        if start + len(coeffs) > precision:
            coeffs = coeffs[: max(precision - start, 0)]
        # canonical form: leading coefficient nonzero unless nothing is known
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        if lead == len(coeffs):
            start, coeffs = precision, []
        else:
            start, coeffs = start + lead, coeffs[lead:]
        coeffs.extend(ExtElem(field, 0) for _ in range(precision - start - len(coeffs)))
        self.field = field
        self.start = start
        self.coeffs = coeffs
        self.precision = precision
        self.param = param

    @classmethod
    def from_poly(cls, field, coeffs, precision, param="u"):
        """Exact polynomial ``sum coeffs[i] u^i`` viewed to ``precision``."""
        return cls(field, 0, coeffs, precision, param)

    @property
    def valuation(self):
        """Leading exponent; equals ``precision`` if zero to known precision."""
        return self.start

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if k >= self.precision:
            raise PrecisionError(f"coefficient u^{k} is beyond precision {self.precision}")
        if k < self.start:
            return ExtElem(self.field, 0)
        return self.coeffs[k - self.start]

    def _compat(self, other):
        if self.field != other.field:
            raise ValueError("series over different residue fields")

    def __add__(self, other):
        self._compat(other)
        lo = min(self.start, other.start)
        prec = min(self.precision, other.precision)
        return LaurentSeries(self.field, lo, [self[k] + other[k] for k in range(lo, prec)],
                             prec, self.param)

    __sub__ = __add__

    def __mul__(self, other):
        self._compat(other)
        start = self.start + other.start
        # each factor is known only to its own window past its leading term
        prec = min(self.precision + other.start, other.precision + self.start)
        n = max(prec - start, 0)
        zero = ExtElem(self.field, 0)
        out = [zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if b:
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.field, start, out, start + n, self.param)

    def shift(self, k):
        """Multiply by ``u^k``."""
        return LaurentSeries(self.field, self.start + k, self.coeffs, self.precision + k, self.param)

    def inverse(self):
        """Reciprocal by Newton iteration ``g <- g (2 - f g)`` (``2 = 0`` here)."""
        if self.is_zero():
            raise ZeroDivisionError("series is zero to known precision")
        v = self.start
        unit = self.shift(-v)  # unit series, valuation 0
        n = unit.precision
        g = LaurentSeries(self.field, 0, [unit.coeffs[0].inverse()], 1, self.param)
        known = 1
        while known < n:
            known = min(2 * known, n)
            f = LaurentSeries(self.field, 0, unit.coeffs[:known], known, self.param)
            g = LaurentSeries(self.field, 0, g.coeffs, known, self.param)
            # in characteristic 2: g (2 - f g) = g * f * g
            g = g * f * g
            g = LaurentSeries(self.field, 0, g.coeffs, known, self.param)
        return g.shift(-v)

    def __truediv__(self, other):
        return self * other.inverse()

    def __str__(self):
        terms = [f"({c})*{self.param}^{self.start + i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms + [f"O({self.param}^{self.precision})"])

    def __repr__(self):
        return f"LaurentSeries({self})"


def _taylor_shift(bits, alpha):
    """Coefficients in ``x`` of ``p(alpha + x)`` for ``p`` given as a bitset."""
    m = alpha.modulus
    zero = ExtElem(m, 0)
    one = ExtElem(m, 1)
    acc = []  # polynomial in x, low degree first
    for i in range(_deg(bits), -1, -1):
        # acc <- acc * (alpha + x) + coeff_i
        nxt = [zero] * (len(acc) + 1)
        for j, c in enumerate(acc):
            nxt[j] = nxt[j] + c * alpha
            nxt[j + 1] = nxt[j + 1] + c
        if (bits >> i) & 1:
            nxt[0] = nxt[0] + one
        acc = nxt
    return acc


def _reverse_bits(bits):
    d = _deg(bits)
    return int(format(bits, "b")[::-1], 2) if d >= 0 else 0


def expand_at(y, place, lo, hi, root=None):
    """Laurent expansion of ``y`` at ``place`` on the exponent window ``[lo, hi)``.

    ``lo`` must not exceed the order of ``y`` at ``place`` so that every
    principal-part coefficient is inside the window.  ``root`` overrides the
    canonical root (any Galois conjugate gives an equally valid expansion).
    """
    y = _as_ratfunc(y)
    if hi <= lo:
        raise ValueError("empty window: need hi > lo")
    if place.is_infinite:
        field = BASE_FIELD
        param = "s"
        v = valuation(y, place)
        if not y:
            return LaurentSeries(field, hi, [], hi, param)
        if lo > v:
            raise PrecisionError(f"window starts at {lo} but y has order {v} at {place}")
        if v >= hi:
            return LaurentSeries(field, hi, [], hi, param)
        # y(1/s) = s^(deg den - deg num) * rev(num)(s) / rev(den)(s)
        num = [ExtElem(field, (_reverse_bits(y.num_bits) >> i) & 1) for i in range(_deg(y.num_bits) + 1)]
        den = [ExtElem(field, (_reverse_bits(y.den_bits) >> i) & 1) for i in range(_deg(y.den_bits) + 1)]
        width = hi - v
        top = LaurentSeries.from_poly(field, num, width, param)
        bottom = LaurentSeries.from_poly(field, den, width, param)
        return (top / bottom).shift(v)

    alpha = root if root is not None else root_of_place(place)
    field = alpha.modulus
    if field != place.poly.bits:
        raise ValueError("root does not live in the residue field of this place")
    param = f"(t-{alpha})"
    if not y:
        return LaurentSeries(field, hi, [], hi, param)
    v = valuation(y, place)
    if lo > v:
        raise PrecisionError(f"window starts at {lo} but y has order {v} at {place}")
    if v >= hi:
        return LaurentSeries(field, hi, [], hi, param)
    num = _taylor_shift(y.num_bits, alpha)
    den = _taylor_shift(y.den_bits, alpha)
    vn = next(i for i, c in enumerate(num) if c)
    vd = next(i for i, c in enumerate(den) if c)
    if vn - vd != v:
        raise ArithmeticError("order at the geometric point disagrees with the valuation")
    width = hi - v
    top = LaurentSeries.from_poly(field, num[vn:], width, param)
    bottom = LaurentSeries.from_poly(field, den[vd:], width, param)
    return (top / bottom).shift(v)
