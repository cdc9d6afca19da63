"""Mechanical verification of the identities behind the iteration family.

Every function here builds a residual in exact rational arithmetic; a
claim "holds to order N" means the residual's known coefficients are all
exactly zero.  No floating point enters any of these checks.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from sectpade.exact.hypergeom import binomial_series, hyp2f1_poly, pochhammer
from sectpade.exact.pade import alpha, pade_pair
from sectpade.exact.series import SeriesPoly


def _error_constant(k, m, p):
    # k! m! (1/p)_{k+1} (1-1/p)_m / ((k+m)! (k+m+1)!)
    num = (
        math.factorial(k)
        * math.factorial(m)
        * pochhammer(Fraction(1, p), k + 1)
        * pochhammer(1 - Fraction(1, p), m)
    )
    return num / (math.factorial(k + m) * math.factorial(k + m + 1))


def remainder_factor(k, m, p, order):
    """The hypergeometric factor ``2F1(m+1, k + 1/p + 1; m+k+2; t)``."""
    return hyp2f1_poly(m + 1, k + Fraction(1, p) + 1, m + k + 2, order)


def lemma_error_residual(k, m, p, order):
    """Residual of the closed-form approximation error of P/Q.

    ``P/Q - (1-t)^(-1/p) + c t^(k+m+1) R/Q`` with
    ``c = k! m! (1/p)_{k+1} (1-1/p)_m / ((k+m)! (k+m+1)!)`` and
    ``R = 2F1(m+1, k+1/p+1; m+k+2; t)``.  Zero to ``order`` when the
    error representation holds.
    """
    if order < k + m + 1:
        raise ValueError("order must be >= k+m+1")
    pair = pade_pair(k, m, p)
    ratio = pair.P.divide(pair.Q, order=order)
    binom = binomial_series(p, order)
    r_over_q = remainder_factor(k, m, p, order).divide(pair.Q)
    shift = SeriesPoly.monomial(k + m + 1, _error_constant(k, m, p))
    return ratio - binom + shift * r_over_q


def wronskian_identity_residual(k, m, p, order):
    """Residual of the first-order identity between Q and the remainder factor.

    ``(p(k+m+1)(1-t) - t) Q R + p t(1-t) (Q R' - Q' R) - p(k+m+1)``,
    zero to ``order``.
    """
    if order < k + m + 2:
        raise ValueError("order must be >= k+m+2")
    pair = pade_pair(k, m, p)
    Q = pair.Q
    R = remainder_factor(k, m, p, order)
    s = p * (k + m + 1)
    lin = SeriesPoly.polynomial([s, -s - 1])  # p(k+m+1)(1-t) - t
    t1mt = SeriesPoly.polynomial([0, 1, -1])  # t(1-t)
    out = lin * Q * R
    out = out + t1mt * Q * R.differentiate() * p
    out = out - t1mt * Q.differentiate() * R * p
    return out - s


def polynomial_identity_residual(k, m, p):
    """Exact polynomial residual of the product-derivative identity.

    ``P Q + p(t-1)(P'Q - PQ') - C t^(k+m)`` with
    ``C = p k! m! (1/p)_{k+1} (1-1/p)_m / ((k+m)!)^2``.
    Must be the exact zero polynomial for every admissible (k, m, p).
    """
    pair = pade_pair(k, m, p)
    P, Q = pair.P, pair.Q
    tm1 = SeriesPoly.polynomial([-1, 1])
    lhs = P * Q + tm1 * (P.differentiate() * Q - P * Q.differentiate()) * p
    c_num = (
        p
        * math.factorial(k)
        * math.factorial(m)
        * pochhammer(Fraction(1, p), k + 1)
        * pochhammer(1 - Fraction(1, p), m)
    )
    C = c_num / math.factorial(k + m) ** 2
    return lhs - SeriesPoly.monomial(k + m, C)


def hypergeometric_identity_residual(a, b, c, order):
    """Residual of the two-function product identity, zero to ``order``.

    With ``F = 2F1(a,b;c;t)`` and ``G = 2F1(1-a,1-b;2-c;t)``:

    ``(t(a+b-1) - c + 1) F G + t(1-t)(F G' - F' G) - (1 - c)``

    where the derivatives are assembled from the contiguous series
    ``F' = (ab/c) 2F1(a+1,b+1;c+1;t)`` and
    ``G' = ((1-a)(1-b)/(2-c)) 2F1(2-a,2-b;3-c;t)``.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    F = hyp2f1_poly(a, b, c, order)
    G = hyp2f1_poly(1 - a, 1 - b, 2 - c, order)
    lin = SeriesPoly.polynomial([1 - c, a + b - 1])  # t(a+b-1) - c + 1
    t1mt = SeriesPoly.polynomial([0, 1, -1])
    out = lin * (F * G)

    gpre = (1 - a) * (1 - b)
    if gpre:
        G_up = hyp2f1_poly(2 - a, 2 - b, 3 - c, order)
        out = out + t1mt * (F * G_up) * (gpre / (2 - c))
    fpre = a * b
    if fpre:
        F_up = hyp2f1_poly(a + 1, b + 1, c + 1, order)
        out = out - t1mt * (F_up * G) * (fpre / c)
    return out - (1 - c)


@dataclass(frozen=True)
class FSeriesReport:
    """Coefficients of the one-step error map ``1 - (1-t)(P/Q)^p``."""

    k: int
    m: int
    p: int
    coeffs: list
    alpha: Fraction
    first_nonzero_index: int


def f_series(k, m, p, order):
    """Expand ``f(t) = 1 - (1-t)(P(t)/Q(t))^p`` through ``t^order``.

    For ``k >= m-1`` the theory asserts coefficients 0..k+m vanish, the
    rest are positive, and the first nonzero one equals ``alpha(k,m,p)``.
    """
    if order < k + m + 1:
        raise ValueError("order must be >= k+m+1")
    pair = pade_pair(k, m, p)
    ratio = pair.P.divide(pair.Q, order=order)
    powered = ratio.pow_int(p)
    one_minus_t = SeriesPoly.polynomial([1, -1])
    f = SeriesPoly.one() - one_minus_t * powered
    idx = f.first_nonzero_index()
    return FSeriesReport(
        k=k,
        m=m,
        p=p,
        coeffs=list(f.coeffs),
        alpha=alpha(k, m, p),
        first_nonzero_index=-1 if idx is None else idx,
    )


def ratio_series(k, m, p, order):
    """Taylor coefficients of ``P/Q`` through ``t^order`` (all positive for k >= m-1)."""
    pair = pade_pair(k, m, p)
    return pair.P.divide(pair.Q, order=order)


def order_condition_residual(k, m, p):
    """``(1-t)^(-1/p) Q - P`` through ``t^(k+m)``; zero iff the pair
    matches the target series to the defining order."""
    pair = pade_pair(k, m, p)
    binom = binomial_series(p, k + m)
    return binom * pair.Q - pair.P
