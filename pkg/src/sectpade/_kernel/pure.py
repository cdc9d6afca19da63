"""Pure-Python truncated-series kernels.

Reference implementation of the two hot loops (truncated convolution and
power-series long division) over exact rationals.  The compiled backend in
``_speedups.pyx`` must produce identical output; this module is the
readable, always-available fallback.

Coefficient lists are ascending powers; entries beyond the end of a list
are treated as zero.
"""

from fractions import Fraction

_ZERO = Fraction(0)


def series_mul(a, b, n_out):
    """Convolution of ``a`` and ``b`` truncated to ``n_out`` coefficients."""
    out = [_ZERO] * n_out
    for i, ai in enumerate(a):
        if i >= n_out:
            break
        if not ai:
            continue
        top = min(len(b), n_out - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def series_div(a, b, n_out):
    """First ``n_out`` coefficients of the power series ``a / b``.

    Requires ``b[0] != 0``.  Long-division recurrence:
    ``q[j] = (a[j] - sum_{i>=1} b[i] * q[j-i]) / b[0]``.
    """
    b0 = b[0] if b else _ZERO
    if not b0:
        raise ZeroDivisionError("series division requires a nonzero constant term")
    q = []
    for j in range(n_out):
        acc = a[j] if j < len(a) else _ZERO
        top = min(j, len(b) - 1)
        for i in range(1, top + 1):
            bi = b[i]
            if bi:
                acc -= bi * q[j - i]
        q.append(acc / b0)
    return q
