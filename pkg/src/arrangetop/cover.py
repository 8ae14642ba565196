"""The Z/d covering F -> M and the orbit-counting connectivity arguments.

Every elementary loop around a line is oriented so that the deck character
sends it to +1; a loop class is an integer vector over those generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arrangement import Arrangement, IntersectionLattice, LatticePoint, intersection_lattice, is_central
from .errors import InternalError, NotAdmissible, PropositionHypothesesNotMet
from .pencil import Pencil, base_locus


@dataclass(frozen=True)
class DeckCharacter:
    d: int

    def __call__(self, loop: LoopClass) -> int:
        return sum(loop.coefficients) % self.d

    @property
    def values(self) -> dict[int, int]:
        return {i: 1 % self.d for i in range(1, self.d + 1)}


@dataclass(frozen=True)
class LoopClass:
    coefficients: tuple[int, ...]

    def __add__(self, other: LoopClass) -> LoopClass:
        return LoopClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    @classmethod
    def elementary(cls, d: int, i: int) -> LoopClass:
        return cls(tuple(1 if j == i else 0 for j in range(1, d + 1)))


@dataclass(frozen=True)
class ConnectivityVerdict:
    components: int
    rationale: dict = field(default_factory=dict)


def boundary_loop(A: Arrangement, p: LatticePoint) -> LoopClass:
    """Small loop around p: the sum of the elementary loops of the lines through p."""
    return LoopClass(tuple(1 if i in p.incident else 0 for i in range(1, A.d + 1)))


def orbit_count(d: int, r_values) -> int:
    """Orbits of the subgroup of Z/d generated by r_values, acting by translation."""
    if d < 1:
        raise ValueError("d must be positive")
    g = d
    for r in r_values:
        g = gcd(g, r % d)
    return g


def global_fiber_connectivity(A: Arrangement, P: Pencil,
                              lattice: IntersectionLattice | None = None) -> ConnectivityVerdict:
    if not P.reduced:
        raise PropositionHypothesesNotMet("some fiber of the pencil is non-reduced")
    if not P.covers_arrangement:
        raise PropositionHypothesesNotMet("the pencil fibers do not exhaust the arrangement")
    report = base_locus(P, lattice)
    simple = [bp for bp in report.points if all(m == 1 for m in bp.multiplicities)]
    if not simple:
        raise PropositionHypothesesNotMet("no simple base point")
    lattice = lattice or intersection_lattice(A)
    point = next(p for p in lattice.points if p.point == simple[0].point)
    R = DeckCharacter(A.d)
    r = R(boundary_loop(A, point))
    k = P.k
    if r != k % A.d:
        raise InternalError("boundary loop at a simple base point should have R = k")
    upper = orbit_count(A.d, {r})
    lower = k
    if upper != lower:
        raise InternalError(f"orbit bound {upper} and fiber bound {lower} disagree")
    return ConnectivityVerdict(1, {
        "base_point": [str(c) for c in point.point],
        "R(beta_p)": r,
        "upper_bound": upper,
        "lower_bound": lower,
    })


def local_fiber_connectivity(A: Arrangement, p: LatticePoint) -> ConnectivityVerdict:
    if p.multiplicity < 3:
        raise NotAdmissible(f"point of multiplicity {p.multiplicity}: the local target is not hyperbolic")
    R = DeckCharacter(A.d)
    r_values = {R(boundary_loop(A, p))}
    if is_central(A):
        components = orbit_count(A.d, r_values)
        if components != A.d:
            raise InternalError("a central arrangement should give d components")
        return ConnectivityVerdict(components, {"central": True, "R_values": sorted(r_values)})
    avoiding = next(i for i in range(1, A.d + 1) if i not in p.incident)
    r_values.add(R(LoopClass.elementary(A.d, avoiding)))
    return ConnectivityVerdict(orbit_count(A.d, r_values), {
        "central": False,
        "line_avoiding_p": avoiding,
        "R_values": sorted(r_values),
    })
