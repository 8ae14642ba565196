"""Sparse multivariate polynomials with cyclotomic coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .field import CycNumber, lcm


def _cyc(x) -> CycNumber:
    return x if isinstance(x, CycNumber) else CycNumber.rational(Fraction(x))


class MultiPoly:
    """Polynomial over an ordered variable list; terms map exponent tuples to coefficients.

    Zero coefficients are never stored, so equality of term maps is equality of
    polynomials.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent tuple does not match the variable list")
            c = _cyc(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def constant(cls, variables, c) -> MultiPoly:
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def var(cls, variables, name: str) -> MultiPoly:
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: CycNumber.one()})

    @classmethod
    def linear(cls, variables, coeffs) -> MultiPoly:
        variables = tuple(variables)
        terms = {}
        for i, c in enumerate(coeffs):
            terms[tuple(1 if j == i else 0 for j in range(len(variables)))] = c
        return cls(variables, terms)

    # -- queries --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    @property
    def conductor(self) -> int:
        n = 1
        for c in self.terms.values():
            n = lcm(n, c.conductor)
        return n

    def coefficient(self, exps) -> CycNumber:
        return self.terms.get(tuple(exps), CycNumber.zero(self.conductor))

    def _check(self, other: MultiPoly) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational, CycNumber)):
            return MultiPoly.constant(self.variables, other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                terms[e] = terms[e] + v if e in terms else v
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, var: str) -> MultiPoly:
        i = self.variables.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(self.variables, terms)

    def substitute(self, images: dict, variables=None) -> MultiPoly:
        """Compose: replace each variable by a polynomial over `variables`."""
        variables = tuple(variables) if variables is not None else next(iter(images.values())).variables
        result = MultiPoly(variables)
        cache: dict = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(variables, c)
            for v, k in zip(self.variables, e):
                if k:
                    key = (v, k)
                    if key not in cache:
                        cache[key] = images[v] ** k
                    term = term * cache[key]
            result = result + term
        return result

    def evaluate(self, point: dict) -> CycNumber:
        total = CycNumber.zero()
        for e, c in self.terms.items():
            t = c
            for v, k in zip(self.variables, e):
                if k:
                    t = t * (_cyc(point[v]) ** k)
            total = total + t
        return total

    def equals(self, other: MultiPoly) -> bool:
        return (self - other).is_zero()

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and (self - other).is_zero()
        if isinstance(other, (int, Rational, CycNumber)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"MultiPoly({render_poly(self)!r})"

    def __str__(self):
        return render_poly(self)


def render_poly(p: MultiPoly, conductor: int | None = None) -> str:
    from .literal import render

    if p.is_zero():
        return "0"
    n = conductor or p.conductor
    symbol = "zeta" if "z" in p.variables else "z"
    pieces = []
    for e in sorted(p.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
        text = render(p.terms[e].coerce(n), n, symbol)
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(p.variables, e) if k)
        compound = " + " in text or " - " in text
        if compound:
            sign, body = "+", f"({text})"
        else:
            sign, body = ("-", text[1:]) if text.startswith("-") else ("+", text)
        if mono:
            if body == "1":
                body = mono
            else:
                body = f"{body}*{mono}"
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
