import pytest
from hypothesis import given
from hypothesis import strategies as st

from f2conics.extfield import (
    BASE_FIELD,
    ExtElem,
    LaurentSeries,
    PrecisionError,
    expand_at,
    root_of_place,
    trace,
)
from f2conics.funcfield import INFINITY, PLACE_T, Place, RatFunc
from f2conics.gf2poly import _irreducible_bits

F16 = 0b10011  # t^4 + t + 1
elems = st.integers(0, 15).map(lambda r: ExtElem(F16, r))


@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    if a:
        assert a * a.inverse() == a.one()
        assert (b / a) * a == b


@given(elems, elems)
def test_trace_is_linear_and_frobenius_invariant(a, b):
    assert trace(a + b) == trace(a) ^ trace(b)
    assert trace(a.frobenius()) == trace(a)


def test_trace_is_balanced():
    # Tr: F_16 -> F_2 is onto, so exactly half the elements have trace 1
    assert sum(trace(ExtElem(F16, r)) for r in range(16)) == 8


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        ExtElem(F16, 1) + ExtElem(0b111, 1)
    with pytest.raises(ZeroDivisionError):
        ExtElem(F16, 0).inverse()


def test_root_is_a_root():
    for p in _irreducible_bits(5):
        a = root_of_place(Place._trusted(p))
        value = a.zero()
        for i in range(p.bit_length()):
            if (p >> i) & 1:
                value = value + a ** i
        assert not value


def test_series_inverse():
    one = ExtElem(BASE_FIELD, 1)
    f = LaurentSeries.from_poly(BASE_FIELD, [one, one], 8)  # 1 + u
    g = f.inverse()
    # 1/(1+u) = 1 + u + u^2 + ... in characteristic 2
    assert [g[k].rep for k in range(8)] == [1] * 8
    with pytest.raises(PrecisionError):
        g[8]


def _check_expansion(y, place, width=6):
    """``den * expansion`` reproduces ``num`` on the known window."""
    lo = min(0, -10)
    s = expand_at(y, place, lo, width)
    root = None if place.is_infinite else root_of_place(place)
    field = BASE_FIELD if place.is_infinite else place.poly.bits

    def local(bits):
        # the polynomial in the local parameter at the point
        if place.is_infinite:
            return expand_at(RatFunc(bits), place, -20, width)
        return expand_at(RatFunc(bits), place, 0, width, root=root)

    lhs = local(y.den_bits) * s
    rhs = local(y.num_bits)
    for k in range(max(lhs.start, rhs.start), min(lhs.precision, rhs.precision)):
        assert lhs[k] == rhs[k], k
    assert s.field == field


@given(st.integers(1, 255), st.integers(1, 255))
def test_expansions_consistent(n, d):
    y = RatFunc(n, d)
    for place in (PLACE_T, INFINITY, Place.finite("t+1"), Place.finite("t^2+t+1"),
                  Place.finite("t^3+t+1")):
        _check_expansion(y, place)


def test_expansion_at_infinity():
    # t^2/(t+1) = t + 1 + 1/t + ...  in s = 1/t: s^-1 + 1 + s + s^2 + ...
    s = expand_at(RatFunc(0b100, 0b11), INFINITY, -1, 4)
    assert [s[k].rep for k in range(-1, 4)] == [1, 1, 1, 1, 1]


def test_window_must_cover_principal_part():
    with pytest.raises(PrecisionError):
        expand_at(RatFunc(1, 0b100), PLACE_T, -1, 3)
