"""Pencils with completely reducible fibers, their lifts to the Milnor fiber,
and the Hodge-number bookkeeping of the lifted curve.

Conventions: the pencil is [Q_1 : Q_2], so the fiber Q_1 = 0 sits over
a_1 = [0:1] and Q_2 = 0 over a_2 = [1:0]; every other fiber satisfies
Q_j = alpha_j Q_1 + beta_j Q_2 and sits over [-beta_j : alpha_j].
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations_with_replacement

from .arrangement import VARIABLES, Arrangement, IntersectionLattice, intersection_lattice
from .cyclo import CycMatrix, CycNumber, MultiPoly, rank, solve
from .errors import (
    InternalError,
    NonIsolatedSingularity,
    NotAPencil,
    PropositionHypothesesNotMet,
    ValidationError,
)
from .resonance import NetPartition

BINARY = ("u", "v")


@dataclass(frozen=True)
class Pencil:
    arrangement: Arrangement
    blocks: NetPartition
    exponents: tuple[int, ...]  # exponents[i-1] is the exponent of line i
    Q: tuple[MultiPoly, ...]
    coords: tuple[tuple[CycNumber, CycNumber], ...]  # (alpha_j, beta_j) for j >= 3

    @property
    def k(self) -> int:
        return len(self.Q)

    @property
    def reduced(self) -> bool:
        return all(self.exponents[i - 1] == 1 for i in self.blocks.support)

    @property
    def covers_arrangement(self) -> bool:
        return self.blocks.support == tuple(range(1, self.arrangement.d + 1))

    def punctures(self) -> list[tuple[CycNumber, CycNumber]]:
        n = self.arrangement.conductor
        zero, one = CycNumber.zero(n), CycNumber.one(n)
        pts = [(zero, one), (one, zero)]
        for alpha, beta in self.coords:
            pts.append((-beta, alpha))
        return pts


def _monomials(degree: int, nvars: int):
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


def _coefficient_rows(polys, degree: int, nvars: int):
    monos = _monomials(degree, nvars)
    return [[p.coefficient(m) for m in monos] for p in polys]


def pencil_from_net(A: Arrangement, net: NetPartition, exponents: dict | None = None) -> Pencil:
    """Build [Q_1 : Q_2] from a block partition and solve for the other fibers."""
    blocks = net.blocks
    if len(blocks) < 3:
        raise NotAPencil("a pencil of this kind needs at least three fibers")
    seen = set()
    for b in blocks:
        if not b:
            raise ValidationError("empty block")
        for i in b:
            if not 1 <= i <= A.d:
                raise ValidationError(f"line index {i} out of range 1..{A.d}")
            if i in seen:
                raise ValidationError(f"line {i} appears in two blocks")
            seen.add(i)
    exps = [1] * A.d
    for i, e in (exponents or {}).items():
        if int(e) < 1:
            raise ValidationError("exponents must be positive")
        exps[int(i) - 1] = int(e)
    Q = []
    for b in blocks:
        q = MultiPoly.constant(VARIABLES, 1)
        for i in b:
            q = q * A.lines[i - 1].poly() ** exps[i - 1]
        Q.append(q)
    degrees = {q.degree() for q in Q}
    if len(degrees) != 1:
        raise NotAPencil(f"fibers have different degrees {sorted(degrees)}")
    deg = degrees.pop()
    rows = _coefficient_rows(Q, deg, 3)
    span = rank(CycMatrix.from_rows(rows))
    if span != 2:
        raise NotAPencil(f"the fibers span a space of dimension {span}, not 2")
    basis = CycMatrix.from_rows([[rows[0][c], rows[1][c]] for c in range(len(rows[0]))])
    coords = []
    for j in range(2, len(Q)):
        sol = solve(basis, rows[j])
        if sol is None:  # pragma: no cover - excluded by the span check
            raise NotAPencil("fiber outside the span of the first two")
        alpha, beta = sol
        if not (Q[j] - alpha * Q[0] - beta * Q[1]).is_zero():
            raise InternalError("pencil coordinates failed the polynomial check")
        coords.append((alpha, beta))
    return Pencil(A, net, tuple(exps), tuple(Q), tuple(coords))


@dataclass(frozen=True)
class BasePoint:
    point: tuple[CycNumber, CycNumber, CycNumber]
    multiplicities: tuple[int, ...]  # one entry per fiber


@dataclass(frozen=True)
class BaseLocusReport:
    points: tuple[BasePoint, ...]
    simple_point_exists: bool

    def bezout_total(self) -> int:
        return sum(p.multiplicities[0] * p.multiplicities[1] for p in self.points)


def base_locus(P: Pencil, lattice: IntersectionLattice | None = None) -> BaseLocusReport:
    A = P.arrangement
    lattice = lattice or intersection_lattice(A)
    b1, b2 = P.blocks.blocks[0], P.blocks.blocks[1]
    indices = sorted({lattice.points.index(lattice.point_of(i, j)) for i in b1 for j in b2})
    points = []
    for idx in indices:
        p = lattice.points[idx]
        mults = tuple(
            sum(P.exponents[i - 1] for i in block if i in p.incident) for block in P.blocks.blocks
        )
        if 0 in mults:
            raise InternalError("a base point misses one of the fibers")
        points.append(BasePoint(p.point, mults))
    report = BaseLocusReport(tuple(points), any(all(m == 1 for m in p.multiplicities) for p in points))
    if report.bezout_total() != P.Q[0].degree() * P.Q[1].degree():
        raise InternalError("Bezout audit failed on the base locus")
    return report


@dataclass(frozen=True)
class LiftedCurve:
    g: MultiPoly
    pencil: Pencil
    certified: bool

    @property
    def k(self) -> int:
        return self.g.degree()

    def factored(self) -> str:
        """g as u*v times the remaining linear factors."""
        parts = ["u", "v"]
        for alpha, beta in self.pencil.coords:
            lin = MultiPoly.linear(BINARY, (alpha, beta))
            parts.append(f"({lin})")
        return "*".join(parts)

    def equation(self) -> str:
        return f"{self.factored()} = 1"


def lifted_form(P: Pencil) -> MultiPoly:
    u = MultiPoly.var(BINARY, "u")
    v = MultiPoly.var(BINARY, "v")
    g = u * v
    for alpha, beta in P.coords:
        g = g * (alpha * u + beta * v)
    return g


def lift_pencil(P: Pencil, report: BaseLocusReport | None = None) -> LiftedCurve:
    """The lifted curve {g = 1}, certified by g(Q_1, Q_2) = f."""
    if not P.reduced:
        raise PropositionHypothesesNotMet("a fiber is non-reduced (some exponent exceeds 1)")
    if not P.covers_arrangement:
        raise PropositionHypothesesNotMet("the fibers do not exhaust the arrangement, so Q_1...Q_k != f")
    report = report or base_locus(P)
    if not report.simple_point_exists:
        raise PropositionHypothesesNotMet("no base point is simple on every fiber")
    g = lifted_form(P)
    composed = g.substitute({"u": P.Q[0], "v": P.Q[1]}, VARIABLES)
    if not composed.equals(P.arrangement.defining_polynomial()):
        raise InternalError("g(Q_1, Q_2) differs from the defining polynomial")
    return LiftedCurve(g, P, True)


# -- binary forms -------------------------------------------------------------


def _dehomogenize(g: MultiPoly) -> list[CycNumber]:
    """Coefficients of g(t, 1), lowest degree first."""
    n = g.conductor
    k = g.degree()
    coeffs = [CycNumber.zero(n) for _ in range(k + 1)]
    for (a, _b), c in g.terms.items():
        coeffs[a] = c.coerce(n)
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _upoly_rem(a: list[CycNumber], b: list[CycNumber]) -> list[CycNumber]:
    a = list(a)
    lead_inv = b[-1].inv()
    while len(a) >= len(b) and any(a):
        f = a[-1] * lead_inv
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - f * c
        a.pop()
        while len(a) > 1 and not a[-1]:
            a.pop()
    return a


def _upoly_gcd_degree(a: list[CycNumber], b: list[CycNumber]) -> int:
    while any(b):
        a, b = b, _upoly_rem(a, b)
    return len(a) - 1


def is_squarefree_binary(g: MultiPoly) -> bool:
    """Distinct linear factors: g(t,1) squarefree and v^2 does not divide g."""
    k = g.degree()
    h = _dehomogenize(g)
    if len(h) - 1 < k - 1:
        return False
    if len(h) <= 2:
        return True
    dh = [c * i for i, c in enumerate(h)][1:]
    return _upoly_gcd_degree(h, dh) == 0


def _check_binary(g: MultiPoly) -> int:
    if g.variables != BINARY or not g.is_homogeneous():
        raise ValidationError("expected a homogeneous form in u, v")
    k = g.degree()
    if k < 2:
        raise ValidationError("expected degree at least 2")
    if not is_squarefree_binary(g):
        raise NonIsolatedSingularity("the binary form has a repeated linear factor")
    return k


@dataclass(frozen=True)
class MilnorAlgebra:
    generators: tuple[MultiPoly, MultiPoly]
    graded_dims: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.graded_dims)


def milnor_algebra(g: MultiPoly) -> MilnorAlgebra:
    """Graded dimensions of C[u,v]/(g_u, g_v), degree by degree."""
    k = _check_binary(g)
    gu, gv = g.partial("u"), g.partial("v")
    dims = []
    for t in range(0, 2 * k - 1):
        if t < k - 1:
            dims.append(t + 1)
            continue
        multipliers = [MultiPoly(BINARY, {m: 1}) for m in _monomials(t - (k - 1), 2)]
        gens = [m * gu for m in multipliers] + [m * gv for m in multipliers]
        r = rank(CycMatrix.from_rows(_coefficient_rows(gens, t, 2)))
        dims.append(t + 1 - r)
    while dims and dims[-1] == 0:
        dims.pop()
    if sum(dims) != (k - 1) ** 2:
        raise InternalError("Milnor number mismatch")
    return MilnorAlgebra((gu, gv), tuple(dims))


@dataclass(frozen=True)
class CurveMHS:
    k: int
    chi: int
    genus: int
    h11: int
    h10: int
    h01: int
    label: str = "curve"

    @property
    def general_type(self) -> bool:
        return self.chi < 0

    @property
    def extrapolated(self) -> bool:
        """The weight-one count 2*genus is only spelled out in the source example for k = 3."""
        return self.k > 3

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.h11, self.h10, self.h01)


def curve_mhs(L: LiftedCurve | MultiPoly) -> CurveMHS:
    g = L.g if isinstance(L, LiftedCurve) else L
    k = _check_binary(g)
    chi = 1 - (k - 1) ** 2
    genus = (k - 1) * (k - 2) // 2
    # eigenvalue-one part of H^1 of {g = 1} <-> Milnor algebra in degree k - 2
    h11 = milnor_algebra(g).graded_dims[k - 2]
    mhs = CurveMHS(k, chi, genus, h11, genus, genus)
    if mhs.h11 + 2 * mhs.genus != (k - 1) ** 2:
        raise InternalError("Hodge bookkeeping does not add up to the Milnor number")
    return mhs


def pullback_E(C: CurveMHS, lift: LiftedCurve) -> CurveMHS:
    """Dimensions of E, the pull-back of H^1 of the lifted curve into H^1(F)."""
    if not lift.certified:
        raise PropositionHypothesesNotMet("the lift is not certified")
    return replace(C, label="E")
