"""Leading constant, asymptotic predictor and the two analytic self-checks.

The count of soluble ``y`` with ``H(y) = 2^M`` behaves like
``c 4^M / sqrt(M log 2)``.  ``c`` is an Euler product over all places of
``K = F_2(t)``; here it is evaluated in double precision with a rigorous
bound on the omitted tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .dirichlet import local_factor, local_factor_by_degree
from .funcfield import INFINITY, PLACE_T
from .gf2poly import count_irreducibles

__all__ = [
    "ConstantReport",
    "QUADRATURE_TOL",
    "QuadratureError",
    "TauberianReport",
    "c_omega_closed",
    "c_omega_special",
    "c_omega_from_factor",
    "leading_constant",
    "tail_bound",
    "predict",
    "tauberian_main_term",
    "transform_at_singularity",
    "hankel_check",
    "hankel_parts",
    "tauberian_selftest",
    "c_omega_table",
]

LOG2 = math.log(2.0)
U_AT_TWO = Fraction(1, 4)  # u = 2^-s at s = 2


class QuadratureError(ArithmeticError):
    """Step refinement did not stabilise, or the imaginary part is not zero."""


@dataclass(frozen=True)
class ConstantReport:
    c: float
    partial_product: float
    tail_bound: float
    degrees_used: int

    @property
    def relative_error_bound(self):
        """Bound on ``|c_true / c - 1|`` implied by ``tail_bound``."""
        return math.expm1(self.tail_bound)

    def as_dict(self):
        return {
            "c": self.c,
            "partial_product": self.partial_product,
            "tail_bound": self.tail_bound,
            "relative_error_bound": self.relative_error_bound,
            "degrees_used": self.degrees_used,
        }


def c_omega_special():
    """``c_w`` for ``w`` in ``{t, 1/t}``: ``(1/2)(1 - 1/4)/(1 - 1/2)``."""
    return Fraction(1, 2) * (1 - Fraction(1, 4)) / (1 - Fraction(1, 2))


def c_omega_closed(d):
    """``c_w`` for a finite place ``w != t`` of degree ``d`` (closed form)."""
    if d < 1:
        raise ValueError("degree must be positive")
    q = Fraction(2) ** d
    inner = (1 / q) * (1 + (1 - 1 / q) / (q - 1)) - 1 / (q * q / 2)
    return 1 + inner / 2


def c_omega_from_factor(place):
    """``c_w`` as the local factor evaluated at ``u = 1/4``."""
    return local_factor(place).evaluate(U_AT_TWO)


def _delta(d):
    # For x = 2^-d <= 1/4:  (1 - x)^(1/2) c_d = (1 - x)^(1/2) (1 + x/2 - x^2/2)
    # = 1 - (7/8) x^2 + O(x^3), and |(1 - x)^(1/2) c_d - 1| <= 4 x^2 = 2^(-2d+2).
    return 2.0 ** (-2 * d + 2)


def tail_bound(max_degree):
    """Bound on ``|sum_{deg w > D} log((1 - 2^-deg w)^(1/2) c_w)|``.

    There are at most ``2^d / d`` places of degree ``d``, each contributing
    ``|log(1 + e)| <= delta / (1 - delta)`` with ``delta = 2^(-2d+2)``.
    Summing ``4 * 2^-d`` over ``d > D`` gives the closed form below.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    d = max_degree + 1
    return 4.0 * 2.0 ** (-max_degree) / (d * (1.0 - _delta(d)))


def leading_constant(max_degree):
    """``c`` with the Euler product truncated to places of degree ``<= max_degree``."""
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    special = float(c_omega_special())
    # t and 1/t, then t + 1
    log_p = 2 * (0.5 * math.log1p(-0.5) + math.log(special))
    log_p += 0.5 * math.log1p(-0.5) + math.log(float(c_omega_closed(1)))
    for d in range(2, max_degree + 1):
        x = 2.0 ** -d
        log_local = 0.5 * math.log1p(-x) + math.log1p(x / 2 - x * x / 2)
        log_p += count_irreducibles(d) * log_local
    product = math.exp(log_p)
    c = 4.0 * math.sqrt(2.0 * LOG2 / math.pi) * product
    return ConstantReport(c=c, partial_product=product, tail_bound=tail_bound(max_degree),
                          degrees_used=max_degree)


def predict(M, c):
    """``c 4^M / sqrt(M log 2)``: the asymptotic count at height ``2^M``."""
    if M < 1:
        raise ValueError("M must be at least 1")
    return c * 4.0 ** M / math.sqrt(M * LOG2)


def transform_at_singularity(partial_product):
    """``Z(u) (1 - 4u)^(1/2)`` at ``u = 1/4`` from the Euler product.

    ``(1 - 4u)^(1/2) = (1 - 2u)^(-1/2) prod_w (1 - (2u)^deg w)^(1/2)``,
    and ``(1 - 2u)^(-1/2) = sqrt(2)`` at ``u = 1/4``.
    """
    return 4.0 * math.sqrt(2.0) * partial_product


def tauberian_main_term(M, f_tilde, a=2.0, b=0.5, q=2.0):
    """Main term ``f_tilde / Gamma(b) * q^(a M) * M^(b - 1)``."""
    return f_tilde / math.gamma(b) * q ** (a * M) * M ** (b - 1)


# -- Hankel contour ----------------------------------------------------------

_GL_NODES = 16
QUADRATURE_TOL = 1e-9
_MAX_HALVINGS = 22


def _ray_integral(b, M, upper, panels):
    """Gauss-Legendre on ``panels`` equal panels of ``[1, upper]``."""
    x, w = np.polynomial.legendre.leggauss(_GL_NODES)
    edges = np.linspace(1.0, upper, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    pts = mid[:, None] + half[:, None] * x[None, :]
    vals = pts ** (-b) * np.exp(-(M + 1) * np.log1p(pts / M))
    return float(np.sum(half[:, None] * w[None, :] * vals))


def _circle_integral(b, M, n):
    """Trapezoid on ``n`` intervals of ``[-pi, pi]``."""
    theta = np.linspace(-math.pi, math.pi, n + 1)
    vals = np.exp(1j * (1 - b) * theta) * np.exp(-(M + 1) * np.log1p(-np.exp(1j * theta) / M))
    vals[0] *= 0.5
    vals[-1] *= 0.5
    h = 2 * math.pi / n
    return complex(h * math.fsum(vals.real), h * math.fsum(vals.imag))


def _refine(fn, start):
    n = start
    prev = fn(n)
    for _ in range(_MAX_HALVINGS):
        n *= 2
        cur = fn(n)
        if abs(cur - prev) < QUADRATURE_TOL:
            return cur, n
        prev = cur
    raise QuadratureError(f"quadrature did not stabilise after {n} subdivisions")


def hankel_parts(b, M, delta):
    """``(rays, circle)`` contributions to ``(1/2 pi i) int w^-b (1 - w/M)^-(M+1) dw``.

    The contour comes in above the cut from ``-M delta`` to ``-1``, goes
    clockwise round the unit circle and leaves below the cut.  On the rays
    ``w = x e^(+-i pi)`` and the two sides combine to
    ``-sin(pi b)/pi * int_1^(M delta) x^-b (1 + x/M)^-(M+1) dx``.
    """
    if not 0 < b <= 2:
        raise ValueError("need 0 < b <= 2")
    if M < 4:
        raise ValueError("need M >= 4")
    if not 0 < delta < 1:
        raise ValueError("need 0 < delta < 1")
    upper = M * delta
    if upper > 1:
        ray, _ = _refine(lambda n: _ray_integral(b, M, upper, n), 4)
    else:
        ray = 0.0
    # sin(pi b) is exactly zero at integer b; math.sin would leave ~1e-16
    sin_pb = 0.0 if float(b).is_integer() else math.sin(math.pi * b)
    rays = -sin_pb / math.pi * ray
    circ, _ = _refine(lambda n: _circle_integral(b, M, n), 64)
    circle = -circ / (2 * math.pi)
    return rays, circle


def hankel_check(b, M, delta):
    """Real value of the Hankel integral; close to ``-1/Gamma(b)`` for large ``M``."""
    rays, circle = hankel_parts(b, M, delta)
    if abs(circle.imag) > 10 * QUADRATURE_TOL:
        raise QuadratureError(f"imaginary part {circle.imag:.3e} does not vanish")
    return rays + circle.real


# -- synthetic Tauberian check -------------------------------------------------

@dataclass
class TauberianReport:
    """Rows ``(M, ratio)`` with ``ratio = C(2M, M) sqrt(pi M) / 4^M``."""

    max_M: int
    rows: list = field(default_factory=list)
    worst_scaled_error: float = 0.0  # max over M >= 8 of 4M |ratio - 1|
    integral: bool = True

    @property
    def passed(self):
        return self.integral and self.worst_scaled_error <= 1.0

    def as_dict(self):
        return {"max_M": self.max_M, "worst_scaled_error": self.worst_scaled_error,
                "integral": self.integral, "passed": self.passed}


def tauberian_selftest(M_max):
    """Coefficients of ``(1 - 4u)^(-1/2)`` against ``4^M / sqrt(pi M)``.

    The coefficients are central binomials, built exactly with
    ``c_M = c_(M-1) (4M - 2) / M``.  Since ``C(2M, M) = 1 - 1/(8M) + ...``
    times the main term, ``|ratio - 1| <= 1/(4M)`` is required from ``M = 8``.
    """
    if M_max < 8:
        raise ValueError("M_max must be at least 8")
    report = TauberianReport(max_M=M_max)
    coeff = 1
    power = 1
    for M in range(1, M_max + 1):
        num = coeff * (4 * M - 2)
        if num % M:
            report.integral = False
        coeff = num // M
        power <<= 2
        ratio = coeff / power * math.sqrt(math.pi * M)  # int / int: no overflow
        report.rows.append((M, ratio))
        if M >= 8:
            report.worst_scaled_error = max(report.worst_scaled_error, 4 * M * abs(ratio - 1))
    return report


def c_omega_table(max_degree):
    """``(degree, closed form, factor value)`` rows, finite places away from ``t``."""
    rows = [(1, c_omega_special(), c_omega_from_factor(PLACE_T)),
            (1, c_omega_special(), c_omega_from_factor(INFINITY))]
    for d in range(1, max_degree + 1):
        rows.append((d, c_omega_closed(d), local_factor_by_degree(d).evaluate(U_AT_TWO)))
    return rows
