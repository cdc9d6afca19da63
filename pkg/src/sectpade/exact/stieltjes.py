"""Pole structure of P/Q on (1, oo).

For ``k >= m-1`` the denominator's roots are real, simple, and lie to the
right of 1, and the partial-fraction residues of P/Q are positive when
written as ``lambda_j / (1 - a_j t)`` with ``a_j = 1/z_j``.  This module
locates the roots in double precision (degree <= 8, sign-change bisection,
no external rootfinder) and checks those claims.
"""

from dataclasses import dataclass

from sectpade.exact.pade import pade_pair

_ROOT_TOL = 1e-12
_BISECT_STEPS = 200


class RootIsolationError(RuntimeError):
    """Raised when the expected number of denominator roots cannot be
    bracketed or a candidate root fails the residual tolerance."""


class PoleStructureError(AssertionError):
    """Raised when a located pole violates the positivity claims."""


@dataclass(frozen=True)
class Pole:
    z: float        # root of Q, expected > 1
    a: float        # 1/z, expected in (0, 1)
    residue: float  # lambda_j in lambda_j/(1 - a_j t), expected > 0


@dataclass(frozen=True)
class PoleReport:
    k: int
    m: int
    p: int
    poles: tuple


def _horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _bisect(f, lo, hi):
    flo = f(lo)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo <= 1e-15 * abs(mid):
            break
    return 0.5 * (lo + hi)


def stieltjes_structure(k, m, p):
    """Locate the poles of P/Q and verify they are simple, > 1, with
    positive residues.

    Requires ``m >= 1`` (no poles otherwise) and ``k >= m-1`` (outside
    that range the claims are not asserted by the theory).
    """
    if m < 1:
        raise ValueError("no pole structure to verify for m = 0")
    if k < m - 1:
        raise ValueError("pole positivity requires k >= m-1")
    pair = pade_pair(k, m, p)
    qf = pair.Q.float_coeffs()
    pf = pair.P.float_coeffs()
    dqf = [i * c for i, c in enumerate(qf)][1:]

    # All m roots live in (1, oo); scan a geometrically grown window with
    # a refining grid until every sign change is bracketed.
    lo = 1.0 + 1e-9
    hi = 16.0
    grid = 2048
    roots = []
    for _ in range(12):
        xs = [lo * (hi / lo) ** (i / grid) for i in range(grid + 1)]
        vals = [_horner(qf, x) for x in xs]
        brackets = [
            (xs[i], xs[i + 1])
            for i in range(grid)
            if (vals[i] < 0) != (vals[i + 1] < 0) or vals[i] == 0.0
        ]
        if len(brackets) >= m:
            roots = [_bisect(lambda x: _horner(qf, x), a_, b_) for a_, b_ in brackets]
            break
        hi *= 4.0
        grid *= 2
    if len(roots) != m:
        raise RootIsolationError(
            f"found {len(roots)} of {m} roots of Q in (1, {hi:g}) for "
            f"(k, m, p) = ({k}, {m}, {p})"
        )

    poles = []
    for z in roots:
        scale = max(1.0, _horner([abs(c) for c in qf], z))
        resid = abs(_horner(qf, z))
        if resid > _ROOT_TOL * scale:
            raise RootIsolationError(
                f"candidate root z = {z!r} has |Q(z)| = {resid:.3e} "
                f"(tolerance {_ROOT_TOL * scale:.3e})"
            )
        lam = -_horner(pf, z) / (z * _horner(dqf, z))
        a = 1.0 / z
        if not z > 1.0:
            raise PoleStructureError(f"pole z = {z!r} is not > 1")
        if not 0.0 < a < 1.0:
            raise PoleStructureError(f"a = 1/z = {a!r} is not in (0, 1)")
        if not lam > 0.0:
            raise PoleStructureError(f"residue at z = {z!r} is {lam!r}, not > 0")
        poles.append(Pole(z=z, a=a, residue=lam))

    poles.sort(key=lambda pole: pole.z)
    return PoleReport(k=k, m=m, p=p, poles=tuple(poles))
