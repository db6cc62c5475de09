import itertools

import pytest

from f2conics.extfield import root_of_place
from f2conics.funcfield import INFINITY, PLACE_T, Place, RatFunc, enumerate_by_height, parse_ratfunc
from f2conics.gf2poly import _irreducible_bits, _mul
from f2conics.symbol import (
    globally_soluble,
    local_symbol,
    locally_soluble,
    predicted_principal_parts,
    relevant_places,
    residue,
    soluble_principal_parts,
    symbol_sum,
)


def _has_point(n, d, max_deg):
    """Search x0^2 + x0 x1 + y x1^2 = t x2^2 (cleared of denominators) in F_2[t]."""
    coords = range(1 << (max_deg + 1))
    sq = {x: _mul(x, x) for x in coords}
    for x0, x1, x2 in itertools.product(coords, repeat=3):
        if not (x0 or x1 or x2):
            continue
        if _mul(d, sq[x0] ^ _mul(x0, x1)) ^ _mul(n, sq[x1]) == _mul(0b10, _mul(d, sq[x2])):
            return True
    return False


def test_six_candidates_of_height_two():
    soluble = {str(y) for y in enumerate_by_height(1) if globally_soluble(y)}
    assert soluble == {"t", "1/t"}
    assert [globally_soluble(y) for y in enumerate_by_height(0)] == [True, False]  # 0, 1


@pytest.mark.parametrize("M", range(4))
def test_solubility_matches_point_search(M):
    # a point of degree <= 3 exists exactly when the local symbols all vanish
    for y in enumerate_by_height(M):
        assert globally_soluble(y) == _has_point(y.num_bits, y.den_bits, 3), y


def test_symbol_examples():
    assert local_symbol(parse_ratfunc("1/(t+1)"), Place.finite("t+1")) == 1
    assert local_symbol(parse_ratfunc("t+1"), PLACE_T) == 1
    assert local_symbol(parse_ratfunc("1/(t^2+t+1)"), Place.finite("t^2+t+1")) == 1
    assert local_symbol(RatFunc(1), INFINITY) == 1  # y = 1: x^2 + x + 1 has no root in F_2
    assert local_symbol(RatFunc(0b10), INFINITY) == 0


def test_symbol_vanishes_at_good_places():
    y = RatFunc(0b1011, 0b111)
    place = Place.finite("t^3+t^2+1")
    assert local_symbol(y, place) == 0
    assert locally_soluble(y, place)


def test_symbol_is_additive():
    place = Place.finite("t^2+t+1")
    ys = [RatFunc(n, d) for n in range(1, 16) for d in (0b111, 0b111 * 2, 0b10101)]
    for a, b in itertools.combinations(ys[:20], 2):
        assert local_symbol(a + b, place) == local_symbol(a, place) ^ local_symbol(b, place)


def test_symbol_independent_of_root():
    place = Place.finite("t^3+t+1")
    alpha = root_of_place(place)
    y = RatFunc(0b1101, _mul(0b1011, 0b1011))
    bits = {local_symbol(y, place, root=alpha ** (2 ** i)) for i in range(3)}
    assert len(bits) == 1
    assert residue(y, place).modulus == place.poly.bits


def test_relevant_places_order():
    y = RatFunc(1, _mul(0b111, 0b11))
    assert relevant_places(y) == [PLACE_T, INFINITY, Place.finite("t+1"),
                                  Place.finite("t^2+t+1")]


def test_reciprocity_exhaustive_small():
    for M in range(5):
        for y in enumerate_by_height(M):
            assert symbol_sum(y) == 0, y


@pytest.mark.parametrize("d", [1, 2, 3])
def test_principal_parts_match_prediction(d):
    for p in _irreducible_bits(d):
        if p == 0b10:
            continue
        place = Place._trusted(p)
        for k in (1, 2):
            assert soluble_principal_parts(place, k) == predicted_principal_parts(place, k)


def test_principal_parts_reject_special_places():
    with pytest.raises(ValueError):
        soluble_principal_parts(PLACE_T, 1)
    with pytest.raises(ValueError):
        predicted_principal_parts(INFINITY, 1)
    with pytest.raises(ValueError):
        soluble_principal_parts(Place.finite("t+1"), 0)
