# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled truncated-series kernels.

Same contract as ``sectpade._kernel.pure`` but tuned for arbitrary-precision
rational coefficients:

* ``series_mul`` clears denominators once and convolves plain integers, so
  the inner loop is big-int multiply-add with no per-term gcd.
* ``series_div`` runs the long-division recurrence on (numerator,
  denominator) pairs with the classic cross-gcd reductions, avoiding all
  ``Fraction`` instance overhead in the O(n^2) loop.

Results are bit-identical to the pure backend (rationals are kept in
canonical form: reduced, positive denominator).
"""

from fractions import Fraction
from math import gcd


cdef object _lcm2(object x, object y):
    return x // gcd(x, y) * y


def series_mul(a, b, Py_ssize_t n_out):
    """Convolution of ``a`` and ``b`` truncated to ``n_out`` coefficients."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, top
    if la > n_out:
        la = n_out
    if lb > n_out:
        lb = n_out

    cdef object da = 1, db = 1
    for i in range(la):
        da = _lcm2(da, a[i].denominator)
    for j in range(lb):
        db = _lcm2(db, b[j].denominator)

    cdef list an = [0] * la, bn = [0] * lb
    cdef object f
    for i in range(la):
        f = a[i]
        an[i] = f.numerator * (da // f.denominator)
    for j in range(lb):
        f = b[j]
        bn[j] = f.numerator * (db // f.denominator)

    cdef list acc = [0] * n_out
    cdef object ai
    for i in range(la):
        ai = an[i]
        if ai == 0:
            continue
        top = lb
        if top > n_out - i:
            top = n_out - i
        for j in range(top):
            if bn[j] != 0:
                acc[i + j] = acc[i + j] + ai * bn[j]

    cdef object den = da * db
    return [Fraction(c, den) for c in acc]


cdef inline tuple _mul2(object n1, object d1, object n2, object d2):
    # product of reduced rationals, reduced, positive denominator
    cdef object g1 = gcd(n1, d2), g2 = gcd(n2, d1)
    if g1 != 1:
        n1 = n1 // g1
        d2 = d2 // g1
    if g2 != 1:
        n2 = n2 // g2
        d1 = d1 // g2
    return (n1 * n2, d1 * d2)


cdef inline tuple _sub2(object n1, object d1, object n2, object d2):
    # difference of reduced rationals, reduced, positive denominator
    cdef object g = gcd(d1, d2), s, t, g2
    if g == 1:
        return (n1 * d2 - n2 * d1, d1 * d2)
    s = d1 // g
    t = n1 * (d2 // g) - n2 * s
    g2 = gcd(t, g)
    if g2 == 1:
        return (t, s * d2)
    return (t // g2, s * (d2 // g2))


def series_div(a, b, Py_ssize_t n_out):
    """First ``n_out`` coefficients of the power series ``a / b``."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, top
    if lb == 0 or b[0] == 0:
        raise ZeroDivisionError("series division requires a nonzero constant term")

    cdef list bns = [0] * lb, bds = [0] * lb
    cdef object f
    for i in range(lb):
        f = b[i]
        bns[i] = f.numerator
        bds[i] = f.denominator

    # reciprocal of b[0], sign carried by the numerator
    cdef object r0n = bds[0], r0d = bns[0]
    if r0d < 0:
        r0n = -r0n
        r0d = -r0d

    cdef list qns = [], qds = []
    cdef object accn, accd, tn, td
    cdef tuple t2
    for j in range(n_out):
        if j < la:
            f = a[j]
            accn = f.numerator
            accd = f.denominator
        else:
            accn = 0
            accd = 1
        top = j
        if top > lb - 1:
            top = lb - 1
        for i in range(1, top + 1):
            if bns[i] == 0 or qns[j - i] == 0:
                continue
            t2 = _mul2(bns[i], bds[i], qns[j - i], qds[j - i])
            tn = t2[0]
            td = t2[1]
            t2 = _sub2(accn, accd, tn, td)
            accn = t2[0]
            accd = t2[1]
        t2 = _mul2(accn, accd, r0n, r0d)
        qns.append(t2[0])
        qds.append(t2[1])

    return [Fraction(n, d) for n, d in zip(qns, qds)]
