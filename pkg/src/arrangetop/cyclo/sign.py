"""Certified sign determination for real cyclotomic numbers.

Zero is decided exactly from the coordinates.  For a nonzero real value we
evaluate sum(c_k * cos(2*pi*k/N)) in interval arithmetic, doubling the working
precision until the enclosure excludes zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mpmath import iv, libmp

from ..errors import NotReal
from .field import CycNumber

START_PREC = 64
MAX_PREC = 1 << 16


@lru_cache(maxsize=None)
def _cos_table(n: int, prec: int):
    old = iv.prec
    iv.prec = prec
    try:
        return tuple(iv.cos(2 * k * iv.pi / n) for k in range(max(1, n)))
    finally:
        iv.prec = old


def _enclose(a: CycNumber, prec: int):
    table = _cos_table(a.conductor, prec)
    old = iv.prec
    iv.prec = prec
    try:
        total = iv.mpf(0)
        for k, c in enumerate(a.coeffs):
            if c:
                total += table[k] * (iv.mpf(c.numerator) / c.denominator)
        return total
    finally:
        iv.prec = old


def _check_real(a: CycNumber) -> None:
    if not a.is_real():
        raise NotReal(f"{a} is not fixed by complex conjugation")


def sign_real(a: CycNumber) -> int:
    """Return -1, 0 or +1 for a real element of a cyclotomic field."""
    if a.is_zero():
        return 0
    if a.is_rational():
        return 1 if a.coeffs[0] > 0 else -1
    _check_real(a)
    prec = START_PREC
    while prec <= MAX_PREC:
        box = _enclose(a, prec)
        if box.a > 0:
            return 1
        if box.b < 0:
            return -1
        prec *= 2
    raise ArithmeticError("sign refinement did not terminate")  # pragma: no cover


def compare_real(a: CycNumber, b: CycNumber) -> int:
    return sign_real(a - b)


def rational_bounds(a: CycNumber, prec: int = START_PREC) -> tuple[Fraction, Fraction]:
    """Rational lo <= a <= hi for a real cyclotomic number."""
    if a.is_rational():
        q = a.coeffs[0]
        return q, q
    _check_real(a)
    lo, hi = _enclose(a, prec)._mpi_
    return Fraction(*libmp.to_rational(lo)), Fraction(*libmp.to_rational(hi))


def rational_below(a: CycNumber) -> Fraction:
    """A simple rational strictly below a."""
    lo, _ = rational_bounds(a)
    return Fraction(_floor(lo) - 1)


def rational_above(a: CycNumber) -> Fraction:
    _, hi = rational_bounds(a)
    return Fraction(_floor(hi) + 2)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def positive_rational_below(a: CycNumber) -> Fraction:
    """A dyadic rational in (0, a) for a positive real cyclotomic number."""
    if sign_real(a) <= 0:
        raise ValueError("expected a positive number")
    prec = START_PREC
    while True:
        lo, _ = rational_bounds(a, prec)
        if lo > 0:
            k = 0
            while Fraction(1, 2**k) >= lo:
                k += 1
            return Fraction(1, 2**k)
        prec *= 2
