"""Height zeta function as an exact power series in ``u = 2^-s``.

``Z(u) = sum_M N(2^M) u^M`` factors as ``4`` times an Euler product whose
local factors depend only on the degree of the place.  Everything here is
exact: coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .funcfield import INFINITY, PLACE_T, Place
from .gf2poly import count_irreducibles, irreducibles

__all__ = [
    "IntSeries",
    "LocalFactor",
    "local_factor",
    "local_factor_by_degree",
    "local_factor_displays",
    "local_factor_from_measures",
    "z_series",
    "z_series_by_place",
    "zeta_series",
    "zeta_series_by_place",
]


# -- polynomials in u over Q (lists, low degree first) -------------------------

def _trim(p):
    p = [Fraction(c) for c in p]
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _monomial(c, k):
    return _trim([0] * k + [c])


def _peval(p, u):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * u + c
    return acc


class IntSeries:
    """Power series ``sum_{k < order} coeffs[k] u^k`` with exact coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 1:
            raise ValueError("order must be positive")
        cs = [Fraction(c) for c in list(coeffs)[:order]]
        cs.extend([Fraction(0)] * (order - len(cs)))
        self.coeffs = cs
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def from_poly(cls, poly, order):
        return cls(poly, order)

    def __getitem__(self, k):
        if not 0 <= k < self.order:
            raise IndexError(f"u^{k} is outside the truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order):
        return IntSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        n = min(self.order, other.order)
        return IntSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return IntSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)], n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return IntSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        b = other.coeffs
        for i, x in enumerate(self.coeffs[:n]):
            if x:
                for j in range(n - i):
                    out[i + j] += x * b[j]
        return IntSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = IntSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Reciprocal by Newton iteration ``g <- g (2 - f g)``."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("constant term is zero")
        g = IntSeries([1 / self.coeffs[0]], 1)
        known = 1
        while known < self.order:
            known = min(2 * known, self.order)
            f = self.truncate(known)
            g = IntSeries(g.coeffs, known)
            g = g * (IntSeries([2], known) - f * g)
        return g

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self):
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"IntSeries({[str(c) for c in self.coeffs]}, order={self.order})"


@dataclass(frozen=True)
class LocalFactor:
    """Rational function ``num(u) / den(u)`` with exact coefficients."""

    degree: int
    num: tuple
    den: tuple

    def series(self, order):
        return IntSeries(self.num, order) * IntSeries(self.den, order).inverse()

    def evaluate(self, u):
        u = Fraction(u)
        return _peval(self.num, u) / _peval(self.den, u)

    def same_function(self, other):
        """Equality as rational functions (cross-multiplication)."""
        return _pmul(list(self.num), list(other.den)) == _pmul(list(other.num), list(self.den))

    def __add__(self, other):
        return LocalFactor(self.degree,
                           tuple(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den))),
                           tuple(_pmul(self.den, other.den)))

    def __mul__(self, other):
        return LocalFactor(self.degree, tuple(_pmul(self.num, other.num)),
                           tuple(_pmul(self.den, other.den)))


def _rf(degree, num, den=(1,)):
    return LocalFactor(degree, tuple(_trim(num)), tuple(_trim(den)))


def local_factor_displays(d):
    """Both closed forms of the factor at a place of degree ``d`` away from ``t, 1/t``.

    With ``x = (2u)^d``:

    * ``1 + 1/2 (x (1 + (1 - 2^-d) x / (1 - x)) - 2 u^d)``
    * ``1 + 1/2 x (1 - 2^(1-d) + (1 - 2^-d) x / (1 - x))``
    """
    half = Fraction(1, 2)
    x = _rf(d, _monomial(Fraction(2) ** d, d))
    geometric = _rf(d, x.num, _padd([1], [-c for c in x.num]))  # x / (1 - x)
    tail = _rf(d, [1 - Fraction(1, 2 ** d)]) * geometric
    one = _rf(d, [1])

    first = x * (one + tail) + _rf(d, _monomial(-2, d))
    first = one + _rf(d, [half]) * first

    second = one + _rf(d, [half]) * x * (_rf(d, [1 - Fraction(2, 2 ** d)]) + tail)
    return first, second


def local_factor_from_measures(d, order):
    """Factor series ``1 + sum_k mu(soluble, v = -k) u^(kd)`` built from measures."""
    coeffs = [Fraction(0)] * order
    coeffs[0] = Fraction(1)
    k = 1
    while k * d < order:
        total = Fraction(2) ** (k * d) * (1 - Fraction(1, 2 ** d))
        coeffs[k * d] = Fraction(2 ** (d - 1) - 1) if k == 1 else total / 2
        k += 1
    return IntSeries(coeffs, order)


def _factor_at_t():
    # (1/2) (1 - u) / (1 - 2u)
    return _rf(1, [Fraction(1, 2), Fraction(-1, 2)], [1, -2])


def local_factor_by_degree(d, special=False):
    if special:
        if d != 1:
            raise ValueError("t and 1/t have degree 1")
        return _factor_at_t()
    if d < 1:
        raise ValueError("degree must be positive")
    return local_factor_displays(d)[1]


def local_factor(place):
    """Local factor at ``place`` as an exact rational function of ``u``."""
    if place.is_infinite or place == PLACE_T:
        return _factor_at_t()
    return local_factor_by_degree(place.degree)


def _places_of_degree(d):
    """Number of places of degree ``d`` other than ``t`` and ``1/t``."""
    return count_irreducibles(d) - (1 if d == 1 else 0)


def z_series(order):
    """``4 * F_t * F_inf * prod_w F_w`` truncated mod ``u^order``, grouped by degree."""
    if order < 1:
        raise ValueError("order must be positive")
    special = local_factor_by_degree(1, special=True).series(order)
    z = special * special * 4
    for d in range(1, order):
        # each factor is 1 + O(u^d): degrees >= order cannot matter
        z = z * local_factor_by_degree(d).series(order) ** _places_of_degree(d)
    return z


def z_series_by_place(order):
    """Same product taken one place at a time (enumerates the irreducibles)."""
    z = IntSeries([4], order)
    for place in (PLACE_T, INFINITY):
        z = z * local_factor(place).series(order)
    for d in range(1, order):
        for p in irreducibles(d):
            place = Place._trusted(p.bits)
            if place == PLACE_T:
                continue
            z = z * local_factor(place).series(order)
    return z


def zeta_series(order):
    """``1 / ((1 - u)(1 - 2u))``: coefficient of ``u^n`` is ``2^(n+1) - 1``."""
    return (IntSeries([1, -1], order) * IntSeries([1, -2], order)).inverse()


def zeta_series_by_place(order):
    """``prod_w (1 - u^deg w)^-1`` over all places of degree ``< order``."""
    z = IntSeries.one(order)
    for d in range(1, order):
        count = count_irreducibles(d) + (1 if d == 1 else 0)
        one_minus = IntSeries.one(order) + IntSeries(_monomial(-1, d), order)
        z = z * one_minus.inverse() ** count
    return z
