"""A one-sided obstruction to 1-formality of the Milnor fiber.

If F were 1-formal, its first resonance variety would equal the tangent cone
of its first characteristic variety.  A certified pencil lift gives a
tangent-cone component E; the weight-one part W_1(F) of H^1(F) would then lie
in a single linear component E'.  When W_1 meets E but has a larger (1,0)-part
than E, E' != E and E cannot be an irreducible component, a contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import Arrangement, intersection_lattice
from .errors import (
    InconsistentSpectrum,
    InternalError,
    NotAPencil,
    NotGeneralType,
    PropositionHypothesesNotMet,
)
from .milnorfiber import Spectrum, milnor_spectrum
from .pencil import CurveMHS, LiftedCurve, Pencil, base_locus, curve_mhs, lift_pencil, pencil_from_net, pullback_E
from .resonance import net_search

NOT_1_FORMAL = "NOT_1_FORMAL"
INCONCLUSIVE = "INCONCLUSIVE"

# Each rule is paired with the source it is taken from.
TANGENT_CONE_RULE = (
    "a 1-formal space X has R_1(X) = TC_1 V_1(X): exp(R_1(X)) is the union of the components of V_1(X) through 1",
    "[DPS08] tangent cone theorem",
)
GENERAL_TYPE_RULE = (
    "an admissible map onto a curve with negative Euler characteristic pulls back H^1 of the curve to an "
    "irreducible component of V_1, hence E is a component of the tangent cone",
    "[A97] structure of positive-dimensional components of V_1",
)
CUP_VANISHING_RULE = (
    "with exactly two conjugate non-trivial eigenvalues, classes of weight one in the two eigenspaces cup to zero, "
    "so W_1(F) lies in R_1(F) and, if R_1(F) = TC_1 V_1(F), inside a single linear component E'",
    "cup-product vanishing on W_1(F) for a conjugate pair of eigenvalues (weight argument); linearity of E' "
    "is part of the cited rule",
)
CURVE_MHS_RULE = (
    "H^1 of the lifted curve {g = 1}: W_1 has dimension twice the genus of its compactification, and H^{1,1} "
    "is the Milnor algebra of g in degree k - 2",
    "[D92] Theorem C24 and Example C26",
)
FIBER_MHS_RULE = (
    "H^{1,1}(F) is the eigenvalue-one part of H^1(F), isomorphic to H^1(M); W_1(F) is the sum of the other "
    "eigenspaces, with its Hodge pieces exchanged by conjugation",
    "[D92] mixed Hodge theory of global Milnor fibers",
)


@dataclass(frozen=True)
class FiberMHS:
    h11F: int
    w1F: int
    w1_h10: int
    d: int = 0
    eigen_exponents: tuple[int, ...] = ()  # exponents e != 0 with a non-zero eigenspace

    @property
    def b1F(self) -> int:
        return self.h11F + self.w1F

    def single_conjugate_pair(self) -> bool:
        if len(self.eigen_exponents) != 2:
            return False
        e1, e2 = self.eigen_exponents
        return (e1 + e2) % self.d == 0 and e1 != e2


def fiber_mhs(s: Spectrum) -> FiberMHS:
    for e, dim in s.dims.items():
        if s.dims.get((-e) % s.d, 0) != dim:
            raise InconsistentSpectrum("spectrum is not conjugation symmetric")
    h11 = s.dims.get(0, 0)
    w1 = sum(v for e, v in s.dims.items() if e % s.d)
    if w1 % 2:
        raise InconsistentSpectrum(f"the weight-one part has odd dimension {w1}")
    exps = tuple(sorted(e for e, v in s.dims.items() if e % s.d and v))
    return FiberMHS(h11, w1, w1 // 2, s.d, exps)


@dataclass(frozen=True)
class TangentConeComponent:
    dims: tuple[int, int, int]  # (e11, e10, e01)
    source: Pencil | None = None

    def __post_init__(self):
        e11, e10, e01 = self.dims
        if e10 != e01:
            raise InternalError("E^{1,0} and E^{0,1} must have equal dimension")
        root = round(sum(self.dims) ** 0.5)
        if root * root != sum(self.dims):
            raise InternalError("dimensions of E must add up to (k - 1)^2")

    @property
    def k(self) -> int:
        return round(sum(self.dims) ** 0.5) + 1

    @property
    def chi(self) -> int:
        return 1 - sum(self.dims)

    @classmethod
    def from_curve(cls, curve: CurveMHS, source: Pencil | None = None) -> TangentConeComponent:
        return cls(curve.dims, source)


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str
    witness: dict
    conditions: dict
    assumptions: tuple[tuple[str, str], ...]
    E: TangentConeComponent | None = None
    fiber: FiberMHS | None = None
    notes: tuple[str, ...] = ()
    candidates: tuple = field(default=(), compare=False)

    def audit(self) -> None:
        if not self.assumptions or any(not cite for _rule, cite in self.assumptions):
            raise InternalError("an obstruction report must cite every rule it uses")
        if self.verdict == NOT_1_FORMAL:
            E, fm = self.E, self.fiber
            ok = (
                fm.w1F > 0
                and fm.single_conjugate_pair()
                and E.dims[1] + E.dims[2] > 0
                and fm.w1_h10 > E.dims[1]
            )
            if not ok:
                raise InternalError("NOT_1_FORMAL is not supported by the recorded dimensions")


def obstruction_test(E: TangentConeComponent, fm: FiberMHS) -> ObstructionReport:
    if E.chi >= 0:
        raise NotGeneralType(f"chi of the lifted curve is {E.chi} >= 0, so E need not be a component")
    e11, e10, e01 = E.dims
    notes = []
    cond_i = fm.w1F > 0
    if cond_i and not fm.single_conjugate_pair():
        cond_i = False
        notes.append("the non-trivial eigenvalues are not a single conjugate pair; the cup-vanishing rule does not apply")
    cond_ii = e10 + e01 > 0
    cond_iii = fm.w1_h10 > e10
    verdict = NOT_1_FORMAL if (cond_i and cond_ii and cond_iii) else INCONCLUSIVE
    witness = {
        "w1_h10": fm.w1_h10,
        "e10": e10,
        "inequality": f"{fm.w1_h10} {'>' if cond_iii else '<='} {e10}",
    }
    report = ObstructionReport(
        verdict,
        witness,
        {"w1F_positive": cond_i, "E_meets_W1": cond_ii, "W1_h10_exceeds_e10": cond_iii},
        (TANGENT_CONE_RULE, GENERAL_TYPE_RULE, CUP_VANISHING_RULE, CURVE_MHS_RULE, FIBER_MHS_RULE),
        E,
        fm,
        tuple(notes),
    )
    report.audit()
    return report


@dataclass(frozen=True)
class Candidate:
    pencil: Pencil
    lift: LiftedCurve
    curve: CurveMHS
    E: TangentConeComponent


def candidate_pencils(A: Arrangement) -> list[Candidate]:
    """Certified lifts of pencils from nets (local ones included) that use every line."""
    if A.d < 3:
        return []
    lattice = intersection_lattice(A)
    out = []
    for net in net_search(A, include_trivial=True, lattice=lattice):
        if net.support != tuple(range(1, A.d + 1)):
            continue
        try:
            P = pencil_from_net(A, net)
            lift = lift_pencil(P, base_locus(P, lattice))
        except (NotAPencil, PropositionHypothesesNotMet):
            continue
        curve = curve_mhs(lift)
        if not curve.general_type:
            continue
        out.append(Candidate(P, lift, curve, TangentConeComponent.from_curve(pullback_E(curve, lift), P)))
    return out


def formality_report(A: Arrangement, spectrum: Spectrum | None = None) -> ObstructionReport:
    spectrum = spectrum or milnor_spectrum(A)
    fm = fiber_mhs(spectrum)
    candidates = candidate_pencils(A)
    reports = [obstruction_test(c.E, fm) for c in candidates]
    for rep in reports:
        if rep.verdict == NOT_1_FORMAL:
            return _with_candidates(rep, candidates)
    if reports:
        return _with_candidates(reports[0], candidates)
    report = ObstructionReport(
        INCONCLUSIVE,
        {"w1_h10": fm.w1_h10, "e10": None, "inequality": None},
        {"w1F_positive": fm.w1F > 0, "E_meets_W1": False, "W1_h10_exceeds_e10": False},
        (TANGENT_CONE_RULE, FIBER_MHS_RULE),
        None,
        fm,
        ("no certified pencil lift: no tangent-cone component E to compare against",),
    )
    report.audit()
    return report


def _with_candidates(rep: ObstructionReport, candidates) -> ObstructionReport:
    return ObstructionReport(rep.verdict, rep.witness, rep.conditions, rep.assumptions, rep.E, rep.fiber,
                             rep.notes, tuple(candidates))


__all__ = [
    "INCONCLUSIVE",
    "NOT_1_FORMAL",
    "Candidate",
    "FiberMHS",
    "ObstructionReport",
    "TangentConeComponent",
    "candidate_pencils",
    "fiber_mhs",
    "formality_report",
    "obstruction_test",
]
