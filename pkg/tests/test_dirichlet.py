from fractions import Fraction

import pytest

from f2conics.dirichlet import (
    IntSeries,
    _places_of_degree,
    local_factor,
    local_factor_by_degree,
    local_factor_displays,
    local_factor_from_measures,
    z_series,
    z_series_by_place,
    zeta_series,
    zeta_series_by_place,
)
from f2conics.funcfield import INFINITY, PLACE_T, Place

# census counts for M = 0..14, computed independently of the series
CENSUS = [1, 2, 7, 24, 86, 304, 1128, 4112, 15424, 57792, 219104, 831232, 3182592,
          12190208, 46945024]


def test_series_arithmetic():
    a = IntSeries([1, 1], 6)
    assert (a * a.inverse()) == IntSeries.one(6)
    assert (a ** 3).integers() == [1, 3, 3, 1, 0, 0]
    assert (a ** -1).integers() == [1, -1, 1, -1, 1, -1]
    assert (a * IntSeries([1], 3)).order == 3  # truncation is the min
    with pytest.raises(ZeroDivisionError):
        IntSeries([0, 1], 4).inverse()
    with pytest.raises(IndexError):
        a[6]


def test_special_factor():
    f = local_factor(PLACE_T)
    assert f == local_factor(INFINITY)
    assert f.evaluate(Fraction(1, 4)) == Fraction(3, 4)
    # (1/2)(1 - u)/(1 - 2u) = 1/2 + u/2 + u^2 + 2u^3 + ...
    assert f.series(5).coeffs == [Fraction(1, 2), Fraction(1, 2), 1, 2, 4]


def test_degree_one_factor():
    f = local_factor(Place.finite("t+1"))
    # 1 + u^2/(1 - 2u)
    assert f.series(7).integers() == [1, 0, 1, 2, 4, 8, 16]


@pytest.mark.parametrize("d", range(1, 9))
def test_two_displays_agree(d):
    first, second = local_factor_displays(d)
    assert first.same_function(second)
    assert first.series(30) == second.series(30)


@pytest.mark.parametrize("d", range(1, 7))
def test_factor_from_measures(d):
    assert local_factor_by_degree(d).series(20) == local_factor_from_measures(d, 20)


def test_factor_has_unit_constant_and_support():
    for d in range(1, 9):
        s = local_factor_by_degree(d).series(d + 1)
        assert s[0] == 1 and all(s[k] == 0 for k in range(1, d))


def test_z_series_matches_census():
    assert z_series(15).integers() == CENSUS


def test_z_series_by_place():
    assert z_series_by_place(11) == z_series(11)


def test_z_series_nonnegative_integers():
    z = z_series(16)
    assert z.is_integral() and min(z.integers()) >= 0


def test_truncation_support():
    # dropping all degree-8 places changes nothing below u^8
    full = z_series(12)
    z = IntSeries([4], 12) * local_factor(PLACE_T).series(12) ** 2
    for d in range(1, 12):
        if d != 8:
            z = z * local_factor_by_degree(d).series(12) ** _places_of_degree(d)
    assert z.coeffs[:8] == full.coeffs[:8]
    assert z.coeffs[8] != full.coeffs[8]


def test_zeta():
    assert zeta_series(12).integers() == [2 ** (n + 1) - 1 for n in range(12)]
    assert zeta_series_by_place(10) == zeta_series(10)


def test_order_validation():
    with pytest.raises(ValueError):
        z_series(0)
    with pytest.raises(ValueError):
        local_factor_by_degree(2, special=True)
