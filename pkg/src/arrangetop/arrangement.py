"""Line arrangements in the projective plane and their intersection lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .cyclo import CycNumber, MultiPoly, lcm, render
from .errors import DuplicateLine, InvalidForm, UnknownBuiltin, ValidationError

VARIABLES = ("x", "y", "z")


def _cyc(x, conductor: int = 1) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    return CycNumber.rational(Fraction(x), conductor)


def _unify(values) -> tuple[CycNumber, ...]:
    values = [_cyc(v) for v in values]
    n = 1
    for v in values:
        n = lcm(n, v.conductor)
    return tuple(v.coerce(n) for v in values)


@dataclass(frozen=True)
class LinearForm:
    """a*x + b*y + c*z, stored with its first nonzero coefficient scaled to 1."""

    coeffs: tuple[CycNumber, CycNumber, CycNumber]

    def __init__(self, a, b=None, c=None):
        raw = tuple(a) if b is None and c is None else (a, b, c)
        if len(raw) != 3:
            raise InvalidForm("a linear form needs exactly three coefficients")
        raw = _unify(raw)
        lead = next((v for v in raw if v), None)
        if lead is None:
            raise InvalidForm("the zero form does not define a line")
        inv = lead.inv()
        object.__setattr__(self, "coeffs", tuple(v * inv for v in raw))

    @property
    def conductor(self) -> int:
        return self.coeffs[0].conductor

    def __call__(self, point) -> CycNumber:
        return sum((a * p for a, p in zip(self.coeffs, point)), CycNumber.zero(self.conductor))

    def poly(self) -> MultiPoly:
        return MultiPoly.linear(VARIABLES, self.coeffs)

    def coerce(self, conductor: int) -> LinearForm:
        return LinearForm(*(v.coerce(conductor) for v in self.coeffs))

    def literals(self, conductor: int | None = None) -> list[str]:
        return [render(v, conductor or self.conductor) for v in self.coeffs]

    def __str__(self):
        return str(self.poly())


def canonical_point(p) -> tuple[CycNumber, ...]:
    """Scale a projective point so that its last nonzero coordinate is 1."""
    p = _unify(p)
    last = next((v for v in reversed(p) if v), None)
    if last is None:
        raise ValueError("the zero vector is not a projective point")
    inv = last.inv()
    return tuple(v * inv for v in p)


def cross(u, v) -> tuple[CycNumber, CycNumber, CycNumber]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[LinearForm, ...]
    label: str | None = None

    def __post_init__(self):
        if not self.lines:
            raise ValidationError("an arrangement needs at least one line")

    @property
    def d(self) -> int:
        return len(self.lines)

    @property
    def conductor(self) -> int:
        return self.lines[0].conductor

    def defining_polynomial(self) -> MultiPoly:
        f = MultiPoly.constant(VARIABLES, 1)
        for line in self.lines:
            f = f * line.poly()
        return f

    def reordered(self, order) -> Arrangement:
        return build_arrangement([self.lines[i] for i in order], self.label)


def build_arrangement(forms, label: str | None = None) -> Arrangement:
    if not forms:
        raise ValidationError("an arrangement needs at least one line")
    forms = [f if isinstance(f, LinearForm) else LinearForm(*f) for f in forms]
    n = 1
    for f in forms:
        n = lcm(n, f.conductor)
    forms = [f.coerce(n) for f in forms]
    seen: dict = {}
    for i, f in enumerate(forms, start=1):
        if f.coeffs in seen:
            raise DuplicateLine(seen[f.coeffs], i)
        seen[f.coeffs] = i
    return Arrangement(tuple(forms), label)


@dataclass(frozen=True)
class LatticePoint:
    point: tuple[CycNumber, CycNumber, CycNumber]
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class IntersectionLattice:
    d: int
    points: tuple[LatticePoint, ...]
    _pair_index: dict = field(default_factory=dict, compare=False, repr=False)

    def multiplicity_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.points:
            counts[p.multiplicity] = counts.get(p.multiplicity, 0) + 1
        return dict(sorted(counts.items()))

    def point_of(self, i: int, j: int) -> LatticePoint:
        """The lattice point where lines i and j (1-based) meet."""
        return self.points[self._pair_index[(min(i, j), max(i, j))]]

    def points_on(self, i: int) -> list[LatticePoint]:
        return [p for p in self.points if i in p.incident]


def intersection_lattice(A: Arrangement) -> IntersectionLattice:
    """All multiple points, each with its sorted incident line indices (1-based)."""
    groups: dict = {}
    order = []
    for i, j in combinations(range(A.d), 2):
        p = canonical_point(cross(A.lines[i].coeffs, A.lines[j].coeffs))
        key = tuple(v.coeffs for v in p)
        if key not in groups:
            groups[key] = (p, set())
            order.append(key)
        groups[key][1].update((i + 1, j + 1))
    points = []
    pair_index = {}
    for key in order:
        p, _ = groups[key]
        incident = tuple(k + 1 for k in range(A.d) if not A.lines[k](p))
        for a, b in combinations(incident, 2):
            pair_index[(a, b)] = len(points)
        points.append(LatticePoint(p, incident))
    lattice = IntersectionLattice(A.d, tuple(points), pair_index)
    total = sum(comb(p.multiplicity, 2) for p in points)
    if total != comb(A.d, 2) or len(pair_index) != comb(A.d, 2):
        raise AssertionError("lattice double count failed")  # pragma: no cover
    return lattice


def is_central(A: Arrangement, lattice: IntersectionLattice | None = None) -> bool:
    if A.d == 1:
        return True
    lattice = lattice or intersection_lattice(A)
    return any(p.multiplicity == A.d for p in lattice.points)


def euler_complement(A: Arrangement, lattice: IntersectionLattice | None = None) -> int:
    """Euler characteristic of the projective complement: 3 - 2d + sum(m_p - 1)."""
    if A.d == 1:
        return 1
    lattice = lattice or intersection_lattice(A)
    return 3 - 2 * A.d + sum(p.multiplicity - 1 for p in lattice.points)


# -- built-in catalog ---------------------------------------------------------


def ceva3() -> Arrangement:
    """(x^3 - y^3)(x^3 - z^3)(y^3 - z^3), factors of each cube difference in turn."""
    z = [CycNumber.zeta(3, k) for k in range(3)]
    one, zero = CycNumber.one(3), CycNumber.zero(3)
    forms = []
    for k in range(3):
        forms.append(LinearForm(one, -z[k], zero))
    for k in range(3):
        forms.append(LinearForm(one, zero, -z[k]))
    for k in range(3):
        forms.append(LinearForm(zero, one, -z[k]))
    return build_arrangement(forms, "ceva3")


def triangle() -> Arrangement:
    return build_arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1)], "triangle")


def central(k: int) -> Arrangement:
    """k lines through [0:0:1]: x, y, x+y, x-y, x+2y, x-2y, ..."""
    if k < 1:
        raise ValidationError("central(k) needs k >= 1")
    forms = [(1, 0, 0), (0, 1, 0)]
    t = 1
    while len(forms) < k:
        forms.append((1, t, 0))
        if len(forms) < k:
            forms.append((1, -t, 0))
        t += 1
    return build_arrangement(forms[:k], f"central({k})")


def generic(k: int) -> Arrangement:
    """x + t*y + t^2*z for t = 0..k-1; Vandermonde rows, so no three are concurrent."""
    if k < 1:
        raise ValidationError("generic(k) needs k >= 1")
    return build_arrangement([(1, t, t * t) for t in range(k)], f"generic({k})")


def single_line() -> Arrangement:
    return build_arrangement([(0, 0, 1)], "line")


def builtin(name: str) -> Arrangement:
    name = name.strip()
    fixed = {"ceva3": ceva3, "triangle": triangle, "line": single_line}
    if name in fixed:
        return fixed[name]()
    for prefix, maker in (("central", central), ("generic", generic)):
        if name.startswith(prefix + "(") and name.endswith(")"):
            arg = name[len(prefix) + 1 : -1]
            if arg.isdigit():
                return maker(int(arg))
    raise UnknownBuiltin(f"unknown builtin arrangement {name!r}")


CATALOG = ("line", "triangle", "central(3)", "central(4)", "generic(4)", "generic(5)", "ceva3")
