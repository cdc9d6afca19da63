"""Truncated power series and exact polynomials over rationals.

A :class:`SeriesPoly` is a list of rational coefficients in ascending
powers of ``t`` together with a truncation order ``N``.  For a truncated
series, coefficients beyond ``t^N`` are *unknown* (not zero); for an exact
polynomial every coefficient beyond the stored degree is known to be zero.
Arithmetic tracks how far results remain fully determined, so an identity
can be asserted "to order N" without ever looking at garbage coefficients.

The order bookkeeping for products uses valuations: if ``a`` is known to
order ``Na`` and ``b`` has its first (possibly) nonzero coefficient at
``vb``, then ``a*b`` is determined to order ``min(Na + vb, Nb + va)``.
This is what lets a factor like ``t^(k+m+1)`` push a residual check out to
the full requested order.

Scalars are :class:`fractions.Fraction`; the module-level alias
:data:`Rational` documents that choice.
"""

from fractions import Fraction

from sectpade import _kernel

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

# sentinel order for exact polynomials in min() computations
_INF = float("inf")


def _as_rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational scalar, got {type(value).__name__}")


class SeriesPoly:
    """Truncated power series (or exact polynomial) with Fraction coefficients."""

    __slots__ = ("coeffs", "order", "is_exact_polynomial")

    def __init__(self, coeffs, order=None, exact=False):
        coeffs = [_as_rational(c) for c in coeffs]
        if exact:
            while len(coeffs) > 1 and not coeffs[-1]:
                coeffs.pop()
            if not coeffs:
                coeffs = [_ZERO]
            order = len(coeffs) - 1
        else:
            if order is None:
                order = len(coeffs) - 1
            if order < 0:
                raise ValueError("truncation order must be >= 0")
            if len(coeffs) != order + 1:
                raise ValueError(
                    f"need exactly order+1={order + 1} coefficients, got {len(coeffs)}"
                )
        self.coeffs = coeffs
        self.order = order
        self.is_exact_polynomial = exact

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def polynomial(cls, coeffs):
        """Exact polynomial with the given ascending coefficients."""
        return cls(coeffs, exact=True)

    @classmethod
    def truncated(cls, coeffs, order):
        """Series known through ``t^order`` only."""
        coeffs = list(coeffs)
        if len(coeffs) < order + 1:
            coeffs = coeffs + [_ZERO] * (order + 1 - len(coeffs))
        return cls(coeffs[: order + 1], order=order)

    @classmethod
    def constant(cls, value):
        return cls.polynomial([value])

    @classmethod
    def monomial(cls, power, coeff=1):
        return cls.polynomial([_ZERO] * power + [coeff])

    @classmethod
    def zero(cls):
        return cls.polynomial([0])

    @classmethod
    def one(cls):
        return cls.polynomial([1])

    # ------------------------------------------------------------------
    # inspection

    @property
    def _known(self):
        """Order through which coefficients are determined (inf if exact)."""
        return _INF if self.is_exact_polynomial else self.order

    @property
    def valuation(self):
        """Index of the first nonzero known coefficient.

        For an all-zero truncated series this is ``order + 1`` (a lower
        bound on the true valuation); for the exact zero polynomial it is
        infinite.
        """
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return _INF if self.is_exact_polynomial else self.order + 1

    @property
    def degree(self):
        """Degree of an exact polynomial (0 for the zero polynomial)."""
        if not self.is_exact_polynomial:
            raise ValueError("degree is only defined for exact polynomials")
        return len(self.coeffs) - 1

    def coefficient(self, j):
        """Coefficient of ``t^j``; raises if it is beyond the known order."""
        if j < len(self.coeffs):
            return self.coeffs[j]
        if self.is_exact_polynomial:
            return _ZERO
        raise ValueError(f"coefficient t^{j} is beyond truncation order {self.order}")

    def is_zero(self):
        """True when every *known* coefficient vanishes."""
        return all(not c for c in self.coeffs)

    def first_nonzero_index(self):
        """Index of the first nonzero known coefficient, or None."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # ------------------------------------------------------------------
    # arithmetic

    def _binary_order(self, other):
        n = min(self._known, other._known)
        return None if n is _INF or n == _INF else int(n)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SeriesPoly.constant(other)
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        n = self._binary_order(other)
        if n is None:
            width = max(len(self.coeffs), len(other.coeffs))
            out = [self.coefficient(j) + other.coefficient(j) for j in range(width)]
            return SeriesPoly(out, exact=True)
        out = [self.coefficient(j) + other.coefficient(j) for j in range(n + 1)]
        return SeriesPoly(out, order=n)

    __radd__ = __add__

    def __neg__(self):
        return SeriesPoly(
            [-c for c in self.coeffs],
            order=None if self.is_exact_polynomial else self.order,
            exact=self.is_exact_polynomial,
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SeriesPoly.constant(other)
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        """Multiply every coefficient by an exact rational scalar."""
        scalar = _as_rational(scalar)
        if not scalar:
            return SeriesPoly.zero()
        return SeriesPoly(
            [scalar * c for c in self.coeffs],
            order=None if self.is_exact_polynomial else self.order,
            exact=self.is_exact_polynomial,
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        if self.is_exact_polynomial and other.is_exact_polynomial:
            n_out = len(self.coeffs) + len(other.coeffs) - 1
            return SeriesPoly(
                _kernel.series_mul(self.coeffs, other.coeffs, n_out), exact=True
            )
        candidates = []
        if not self.is_exact_polynomial:
            candidates.append(self.order + other.valuation)
        if not other.is_exact_polynomial:
            candidates.append(other.order + self.valuation)
        n = min(candidates)
        if n == _INF:
            # a truncated factor times the exact zero polynomial
            return SeriesPoly.zero()
        n = int(n)
        out = _kernel.series_mul(
            self.coeffs[: n + 1], other.coeffs[: n + 1], n + 1
        )
        return SeriesPoly(out, order=n)

    __rmul__ = __mul__

    def pow_int(self, exponent):
        """Integer power by binary exponentiation."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SeriesPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def differentiate(self):
        """Term-by-term derivative."""
        if self.is_exact_polynomial:
            out = [i * c for i, c in enumerate(self.coeffs)][1:] or [_ZERO]
            return SeriesPoly(out, exact=True)
        if self.order == 0:
            raise ValueError("cannot differentiate a series truncated at order 0")
        out = [i * c for i, c in enumerate(self.coeffs)][1:]
        return SeriesPoly(out, order=self.order - 1)

    def divide(self, other, order=None):
        """Power series quotient ``self / other``.

        The divisor must have a nonzero constant term.  When both operands
        are exact polynomials a truncation ``order`` must be supplied,
        since the quotient is generally an infinite series.
        """
        if not isinstance(other, SeriesPoly):
            raise TypeError("divisor must be a SeriesPoly")
        if not other.coeffs[0]:
            raise ZeroDivisionError("series division requires a nonzero constant term")
        n = min(self._known, other._known)
        if order is not None:
            n = min(n, order)
        if n == _INF:
            raise ValueError("dividing exact polynomials requires a truncation order")
        n = int(n)
        out = _kernel.series_div(
            self.coeffs[: n + 1], other.coeffs[: n + 1], n + 1
        )
        return SeriesPoly(out, order=n)

    def truncate(self, order):
        """Forget everything beyond ``t^order`` (result is non-exact)."""
        return SeriesPoly.truncated(self.coeffs, min(order, self._known_int(order)))

    def _known_int(self, fallback):
        k = self._known
        return fallback if k == _INF else int(k)

    # ------------------------------------------------------------------
    # evaluation / conversion

    def evaluate(self, x):
        """Horner evaluation of the known coefficients at ``x``.

        Exact for polynomials; a partial sum for truncated series.  Works
        for any scalar type that mixes with Fraction (complex included).
        """
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def float_coeffs(self):
        return [float(c) for c in self.coeffs]

    # ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return (
            self.is_exact_polynomial == other.is_exact_polynomial
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.is_exact_polynomial, self.order, tuple(self.coeffs)))

    def __repr__(self):
        kind = "poly" if self.is_exact_polynomial else f"series(O{self.order})"
        body = ", ".join(str(c) for c in self.coeffs[:8])
        if len(self.coeffs) > 8:
            body += ", ..."
        return f"<{kind} [{body}]>"
