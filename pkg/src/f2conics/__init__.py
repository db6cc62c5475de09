"""Counting conics ``x0^2 + x0 x1 + y x1^2 = t x2^2`` with a point over F_2(t).

An exhaustive census driven by local symbols is checked against the
coefficients of an exact Euler product; the asymptotic count with its explicit
constant is compared with both.
"""

__version__ = "0.1.0"

from .asymptotic import hankel_check, leading_constant, predict, tauberian_selftest
from .census import CensusRow, census, census_range, census_reference
from .dirichlet import IntSeries, local_factor, z_series, zeta_series
from .funcfield import (
    INFINITY,
    PLACE_T,
    Place,
    RatFunc,
    enumerate_by_height,
    parse_place,
    parse_ratfunc,
    valuation,
)
from .gf2poly import BinaryPoly, factor, irreducibles, is_irreducible, parse_poly
from .symbol import globally_soluble, local_symbol, locally_soluble

__all__ = [
    "BinaryPoly",
    "CensusRow",
    "INFINITY",
    "IntSeries",
    "PLACE_T",
    "Place",
    "RatFunc",
    "census",
    "census_range",
    "census_reference",
    "enumerate_by_height",
    "factor",
    "globally_soluble",
    "hankel_check",
    "irreducibles",
    "is_irreducible",
    "leading_constant",
    "local_factor",
    "local_symbol",
    "locally_soluble",
    "parse_place",
    "parse_poly",
    "parse_ratfunc",
    "predict",
    "tauberian_selftest",
    "valuation",
    "z_series",
    "zeta_series",
]
