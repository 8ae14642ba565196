"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored in the power basis 1, z, ..., z^(phi(N)-1) where z is
the primitive root exp(2*pi*i/N), with rational coordinates.  Mixed-conductor
operations coerce both operands into Q(zeta_lcm).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from ..errors import DivisionByZero


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # low-degree-first integer coefficients, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds z^k reduced to the power basis, for 0 <= k < max(n, 2*phi(n))."""
    phi = euler_phi(n)
    cyc = cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(n, 2 * phi)):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _reduce(raw: list, n: int) -> tuple[Fraction, ...]:
    phi = euler_phi(n)
    table = _power_table(n)
    out = list(raw[:phi]) + [0] * max(0, phi - len(raw))
    for k in range(phi, len(raw)):
        c = raw[k]
        if c:
            row = table[k % n]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return tuple(Fraction(c) for c in out)


@lru_cache(maxsize=None)
def _embedding(small: int, big: int) -> tuple[tuple[int, ...], ...]:
    """Images in Q(zeta_big) of the power basis of Q(zeta_small)."""
    step = big // small
    table = _power_table(big)
    return tuple(table[(k * step) % big] for k in range(euler_phi(small)))


@lru_cache(maxsize=None)
def _conj_images(n: int) -> tuple[tuple[int, ...], ...]:
    table = _power_table(n)
    return tuple(table[(-k) % n] for k in range(euler_phi(n)))


@lru_cache(maxsize=None)
def _trace_of_powers(n: int) -> tuple[int, ...]:
    # Tr(z^k) is a Ramanujan sum; computed from the power table by summing conjugates
    phi = euler_phi(n)
    table = _power_table(n)
    units = [j for j in range(1, n + 1) if gcd(j, n) == 1]
    return tuple(sum(table[(k * j) % n][0] for j in units) for k in range(phi))


class CycNumber:
    """An element of the cyclotomic field Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"expected {euler_phi(conductor)} coordinates for conductor {conductor}, got {len(coeffs)}"
            )
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> CycNumber:
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q, conductor: int = 1) -> CycNumber:
        phi = euler_phi(conductor)
        return cls._raw(conductor, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, conductor: int = 1) -> CycNumber:
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> CycNumber:
        return cls.rational(1, conductor)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> CycNumber:
        """The root of unity exp(2*pi*i*power/conductor)."""
        row = _power_table(conductor)[power % conductor]
        return cls._raw(conductor, tuple(Fraction(c) for c in row))

    # -- coercion -----------------------------------------------------------
    def coerce(self, conductor: int) -> CycNumber:
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"Q(zeta_{self.conductor}) does not embed in Q(zeta_{conductor})")
        images = _embedding(self.conductor, conductor)
        out = [Fraction(0)] * euler_phi(conductor)
        for c, img in zip(self.coeffs, images):
            if c:
                for i, r in enumerate(img):
                    if r:
                        out[i] += c * r
        return CycNumber._raw(conductor, tuple(out))

    def _common(self, other) -> tuple[CycNumber, CycNumber]:
        if isinstance(other, CycNumber):
            if other.conductor == self.conductor:
                return self, other
            n = lcm(self.conductor, other.conductor)
            return self.coerce(n), other.coerce(n)
        if isinstance(other, (int, Rational)):
            return self, CycNumber.rational(other, self.conductor)
        return NotImplemented, NotImplemented

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_real(self) -> bool:
        return self == self.conj()

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return CycNumber._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return CycNumber._raw(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return b - a

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNumber):
            q = Fraction(other)
            return CycNumber._raw(self.conductor, tuple(x * q for x in self.coeffs))
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.conductor
        if n <= 2:
            return CycNumber._raw(n, (a.coeffs[0] * b.coeffs[0],))
        ac, bc = a.coeffs, b.coeffs
        raw = [0] * (len(ac) + len(bc) - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    if y:
                        raw[i + j] += x * y
        return CycNumber._raw(n, _reduce(raw, n))

    __rmul__ = __mul__

    def inv(self) -> CycNumber:
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        n = self.conductor
        phi = len(self.coeffs)
        if self.is_rational():
            return CycNumber.rational(1 / self.coeffs[0], n)
        # solve (multiplication-by-self matrix) * x = e_0
        cols = []
        for k in range(phi):
            raw = [0] * (phi + k)
            for i, c in enumerate(self.coeffs):
                raw[i + k] += c
            cols.append(_reduce(raw, n))
        rows = [[cols[k][i] for k in range(phi)] + [Fraction(1 if i == 0 else 0)] for i in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if rows[r][c])
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [v / piv for v in rows[c]]
            for r in range(phi):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        return CycNumber._raw(n, tuple(rows[i][phi] for i in range(phi)))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNumber):
            if other == 0:
                raise DivisionByZero("division by zero")
            q = 1 / Fraction(other)
            return CycNumber._raw(self.conductor, tuple(x * q for x in self.coeffs))
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return b * a.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inv()
        e = abs(e)
        result = CycNumber.one(self.conductor)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> CycNumber:
        """Complex conjugation, z -> z^-1."""
        n = self.conductor
        if n <= 2:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for c, img in zip(self.coeffs, _conj_images(n)):
            if c:
                for i, r in enumerate(img):
                    if r:
                        out[i] += c * r
        return CycNumber._raw(n, tuple(out))

    def real_part(self) -> CycNumber:
        return (self + self.conj()) / 2

    def imag_part(self) -> CycNumber:
        """Imaginary part, returned in Q(zeta_lcm(N, 4))."""
        n = lcm(self.conductor, 4)
        a = self.coerce(n)
        i = CycNumber.zeta(n, n // 4)
        return (a - a.conj()) * (-i) / 2

    def trace(self) -> Fraction:
        """Absolute trace Q(zeta_N) -> Q."""
        return sum((c * t for c, t in zip(self.coeffs, _trace_of_powers(self.conductor))), Fraction(0))

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNumber):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # normalized trace is invariant under field embeddings
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash(("cyc", self.trace() / len(self.coeffs)))
        return self._hash

    def sign(self) -> int:
        from .sign import sign_real

        return sign_real(self)

    def __complex__(self):
        import cmath

        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * k / self.conductor) for k, c in enumerate(self.coeffs) if c),
            0j,
        )

    def __repr__(self):
        from .literal import render

        return f"CycNumber({self.conductor}, {render(self)!r})"

    def __str__(self):
        from .literal import render

        return render(self)
