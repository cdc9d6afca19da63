"""Gauss hypergeometric polynomials and truncated series, exactly.

Coefficient ``j`` of ``2F1(a, b; c; z)`` is ``(a)_j (b)_j / ((c)_j j!)``.
Coefficients are built incrementally from the term ratio
``(a+j)(b+j) / ((c+j)(j+1))``.  When ``a`` or ``b`` is a nonpositive
integer the series terminates and the sum is stopped at the terminating
degree *before* any lower-parameter zero can be reached; this reproduces
the limit values of the degenerate parameter choices used throughout the
Pade construction without symbolic limits.
"""

from fractions import Fraction

from sectpade.exact.series import SeriesPoly

_ONE = Fraction(1)


def _as_rational(q):
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected an exact rational parameter, got {type(q).__name__}")


def pochhammer(q, j):
    """Rising factorial ``q (q+1) ... (q+j-1)`` with ``(q)_0 = 1``."""
    q = _as_rational(q)
    if j < 0:
        raise ValueError("pochhammer index must be >= 0")
    out = _ONE
    for i in range(j):
        out *= q + i
    return out


def _termination_degree(q):
    """Largest degree with nonzero ``(q)_j``, or None if never terminating."""
    if q.denominator == 1 and q <= 0:
        return -int(q)
    return None


def hyp2f1_poly(a, b, c, order):
    """``2F1(a, b; c; z)`` as a SeriesPoly.

    Returns an exact polynomial when the series terminates at or below
    ``order`` (``a`` or ``b`` a nonpositive integer), otherwise a series
    truncated at ``order``.  Raises ZeroDivisionError when ``(c)_j``
    vanishes while both numerator Pochhammers are still nonzero.
    """
    a = _as_rational(a)
    b = _as_rational(b)
    c = _as_rational(c)
    if order < 0:
        raise ValueError("order must be >= 0")

    stops = [d for d in (_termination_degree(a), _termination_degree(b)) if d is not None]
    terminates = bool(stops)
    degree = min([order] + stops)

    coeffs = [_ONE]
    term = _ONE
    for j in range(degree):
        den = c + j
        if not den:
            raise ZeroDivisionError(
                f"lower parameter hits zero: (c)_{j + 1} = 0 for c = {c} "
                "with non-terminating numerator"
            )
        term = term * (a + j) * (b + j) / (den * (j + 1))
        coeffs.append(term)

    if terminates and min(stops) <= order:
        return SeriesPoly.polynomial(coeffs)
    return SeriesPoly.truncated(coeffs, order)


def binomial_series(p, order):
    """``(1-t)^(-1/p)`` truncated at ``order``; coefficient of ``t^j`` is ``(1/p)_j / j!``."""
    return hyp2f1_poly(Fraction(1, p), 1, 1, order)
