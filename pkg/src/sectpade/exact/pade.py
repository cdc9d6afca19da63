"""Rational approximants of ``(1-z)^(-1/p)`` and the derived iteration maps.

``pade_pair(k, m, p)`` builds the degree-(k, m) numerator/denominator pair
whose ratio matches ``(1-z)^(-1/p)`` through order ``k+m``:

* ``P = 2F1(-k, 1/p - m; -k-m; z)``   (degree <= k)
* ``Q = 2F1(-m, -1/p - k; -k-m; z)``  (degree <= m, Q(0) = 1)

Substituting ``z = 1 - x^p`` turns ``x P(z)/Q(z)`` into one member of the
iteration family for the sector function; helpers here produce that map as
an exact rational function in ``y = x^p``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from sectpade.exact.hypergeom import hyp2f1_poly, pochhammer
from sectpade.exact.series import SeriesPoly


@dataclass(frozen=True)
class PadePair:
    """Numerator/denominator polynomials of the [k/m] approximant."""

    k: int
    m: int
    p: int
    P: SeriesPoly
    Q: SeriesPoly


def _validate_kmp(k, m, p):
    if not (isinstance(k, int) and isinstance(m, int) and isinstance(p, int)):
        raise TypeError("k, m, p must be integers")
    if k < 0 or m < 0:
        raise ValueError("k and m must be >= 0")
    if p < 2:
        raise ValueError("p must be an integer >= 2")


def pade_pair(k, m, p):
    """Construct the [k/m] approximant pair for the given root degree ``p``.

    Any ``k, m >= 0`` is admitted; the printed iteration table includes
    the [0/2] member, which falls outside the ``k >= m-1`` assumption the
    convergence theory uses.  Positivity-based checks enforce that
    assumption themselves where they need it.
    """
    _validate_kmp(k, m, p)
    P = hyp2f1_poly(-k, Fraction(1, p) - m, -k - m, k)
    Q = hyp2f1_poly(-m, Fraction(-1, p) - k, -k - m, m)
    return PadePair(k=k, m=m, p=p, P=P, Q=Q)


def alpha(k, m, p):
    """Leading coefficient of the one-step error series, as an exact rational.

    ``alpha = p k! m! (1/p)_{k+1} (1-1/p)_m / ((k+m)! (k+m+1)!)``.
    Equals 1 at k = m = 0 and is < 1 for k + m >= 1.
    """
    _validate_kmp(k, m, p)
    num = (
        p
        * math.factorial(k)
        * math.factorial(m)
        * pochhammer(Fraction(1, p), k + 1)
        * pochhammer(1 - Fraction(1, p), m)
    )
    return num / (math.factorial(k + m) * math.factorial(k + m + 1))


def substituted_pair(pair):
    """Polynomials ``(N, D)`` in ``y = x^p`` with ``h(x) = x N(x^p) / D(x^p)``.

    Obtained by the substitution ``z = 1 - y`` in P and Q.
    """
    shift = SeriesPoly.polynomial([1, -1])  # z = 1 - y
    return pair.P.evaluate(shift), pair.Q.evaluate(shift)


def cleared_form(pair):
    """Integer-coefficient form of the iteration map in ``y = x^p``.

    Returns ``(num, den)`` coefficient lists (ints, ascending powers of
    ``y``) with content 1 and a positive constant term in ``den``, so that
    ``h(x) = x * num(x^p) / den(x^p)``.
    """
    N, D = substituted_pair(pair)
    lcm = 1
    for c in N.coeffs + D.coeffs:
        lcm = math.lcm(lcm, c.denominator)
    num = [int(c * lcm) for c in N.coeffs]
    den = [int(c * lcm) for c in D.coeffs]
    content = math.gcd(*(num + den))
    if content > 1:
        num = [c // content for c in num]
        den = [c // content for c in den]
    if den[0] < 0:
        num = [-c for c in num]
        den = [-c for c in den]
    return num, den
