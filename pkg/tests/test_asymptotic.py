import math
from fractions import Fraction

import mpmath
import pytest

from f2conics.asymptotic import (
    QuadratureError,
    c_omega_closed,
    c_omega_table,
    hankel_check,
    hankel_parts,
    leading_constant,
    predict,
    tail_bound,
    tauberian_main_term,
    tauberian_selftest,
    transform_at_singularity,
)


def _place_counts(max_degree):
    # 2^d = sum_{e | d} e N(e), solved upward; N(1) includes t, plus one for 1/t
    n = {}
    for d in range(1, max_degree + 1):
        n[d] = (2 ** d - sum(e * n[e] for e in n if d % e == 0)) // d
    n[1] += 1
    return n


def _log_local(d, special=False):
    x = mpmath.mpf(2) ** -d
    c = mpmath.mpf(3) / 4 if special else 1 + x / 2 - x * x / 2
    return mpmath.log(1 - x) / 2 + mpmath.log(c)


def _log_product(lo, hi):
    counts = _place_counts(hi)
    total = mpmath.mpf(0)
    for d in range(lo, hi + 1):
        k = counts[d]
        if d == 1:
            total += 2 * _log_local(1, special=True)
            k -= 2
        total += k * _log_local(d)
    return total


@pytest.fixture(scope="module")
def c_reference():
    with mpmath.workdps(40):
        c = 4 * mpmath.sqrt(2 * mpmath.log(2) / mpmath.pi) * mpmath.exp(_log_product(1, 70))
        return float(c)


def test_c_omega_values():
    assert c_omega_closed(1) == Fraction(9, 8)
    for d in range(1, 12):
        x = Fraction(1, 2 ** d)
        assert c_omega_closed(d) == 1 + x / 2 - x * x / 2
    assert all(a == b for _, a, b in c_omega_table(8))


def test_constant_against_high_precision(c_reference):
    rep = leading_constant(30)
    assert abs(rep.c / c_reference - 1) <= rep.relative_error_bound
    assert rep.c == pytest.approx(0.53781907565, rel=1e-10)


@pytest.mark.parametrize("D", [4, 8, 12, 20])
def test_tail_bound_is_rigorous(D):
    with mpmath.workdps(40):
        tail = abs(_log_product(D + 1, D + 60))
    assert float(tail) <= tail_bound(D)


def test_tail_bound_decreases():
    bounds = [leading_constant(D).tail_bound for D in range(2, 40)]
    assert all(a > b for a, b in zip(bounds, bounds[1:]))


def test_partial_products_within_bounds():
    final = leading_constant(40).c
    for D in range(4, 40, 4):
        rep = leading_constant(D)
        assert abs(final / rep.c - 1) <= rep.relative_error_bound


def test_predict():
    assert predict(5, 0) == 0
    c = leading_constant(30).c
    for M in range(1, 30):
        assert predict(M + 1, c) / predict(M, c) == pytest.approx(4 * math.sqrt(M / (M + 1)))
    with pytest.raises(ValueError):
        predict(0, c)


def test_predict_is_the_general_main_term():
    rep = leading_constant(30)
    f_tilde = transform_at_singularity(rep.partial_product)
    for M in (1, 7, 12, 40):
        assert predict(M, rep.c) == pytest.approx(tauberian_main_term(M, f_tilde), rel=1e-12)


def test_tauberian_selftest():
    rep = tauberian_selftest(200)
    assert rep.passed
    assert rep.rows[0] == (1, pytest.approx(2 / (4 / math.sqrt(math.pi))))
    for M, ratio in rep.rows[:60]:
        assert ratio == pytest.approx(math.comb(2 * M, M) * math.sqrt(math.pi * M) / 4 ** M)
    with pytest.raises(ValueError):
        tauberian_selftest(7)


@pytest.mark.parametrize("M", [4, 10, 50])
def test_hankel_integer_b_exact(M):
    # only the residue at 0 survives: -1 for b = 1, -g'(0) = -(M+1)/M for b = 2
    assert hankel_check(1, M, 0.5) == pytest.approx(-1, abs=1e-12)
    assert hankel_check(2, M, 0.5) == pytest.approx(-(M + 1) / M, abs=1e-9)


@pytest.mark.parametrize("b", [0.25, 0.5, 0.75, 1.5])
def test_hankel_against_mpmath(b):
    M, delta = 20, 0.5
    with mpmath.workdps(25):
        g = lambda w: (1 - w / M) ** (-(M + 1))
        ray = mpmath.quad(lambda x: x ** (-b) * g(-x), [1, M * delta])
        circle = mpmath.quad(lambda th: mpmath.exp(1j * (1 - b) * th) * g(mpmath.expj(th)),
                             [-mpmath.pi, 0, mpmath.pi])
        want = -mpmath.sin(mpmath.pi * b) / mpmath.pi * ray - circle / (2 * mpmath.pi)
    rays, circ = hankel_parts(b, M, delta)
    assert abs(circ.imag) < 1e-9
    assert rays + circ.real == pytest.approx(float(want.real), abs=1e-9)


def test_hankel_converges_to_gamma():
    for b in (0.25, 0.5):
        errs = [abs(hankel_check(b, M, 0.5) + 1 / math.gamma(b)) for M in (10, 100, 1000)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] * 1000 < 1  # O(1/M)


def test_hankel_validation():
    for args in [(0, 10, 0.5), (2.5, 10, 0.5), (0.5, 3, 0.5), (0.5, 10, 1.0)]:
        with pytest.raises(ValueError):
            hankel_check(*args)
    assert issubclass(QuadratureError, ArithmeticError)
