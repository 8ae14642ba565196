"""Presentation of pi_1(M) from braid monodromy, Fox calculus at the diagonal
character, and the monodromy eigenspace spectrum of H^1(F).

Words are tuples of nonzero integers: +j is the generator x_j, -j its inverse.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, euler_complement, intersection_lattice
from .braid import BraidWord, MonodromyData, braid_monodromy, decone
from .cyclo import CycMatrix, CycNumber, rank
from .errors import InconsistentSpectrum, InternalError, ValidationError

Word = tuple[int, ...]


def free_reduce(word) -> Word:
    out: list[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(word: Word) -> Word:
    return tuple(-a for a in reversed(word))


def _substitute(word: Word, images: dict[int, Word]) -> Word:
    out: list[int] = []
    for a in word:
        out.extend(images[a] if a > 0 else invert(images[-a]))
    return free_reduce(out)


def _letter_images(n: int, letter: int) -> dict[int, Word]:
    """Action of sigma_k^{+-1} on the free group, for the fiber base point below the strands."""
    k = abs(letter)
    images = {j: (j,) for j in range(1, n + 1)}
    if letter > 0:
        images[k] = (k + 1,)
        images[k + 1] = (k + 1, k, -(k + 1))
    else:
        images[k + 1] = (k,)
        images[k] = (-k, k + 1, k)
    return images


def braid_action(braid: BraidWord, word: Word) -> Word:
    """Push a loop through the braid, crossing by crossing in time order."""
    for letter in braid.letters:
        word = _substitute(word, _letter_images(braid.n, letter))
    return word


@dataclass(frozen=True)
class GroupPresentation:
    n: int
    relators: tuple[Word, ...]
    full_relators: tuple[Word, ...] = ()

    @property
    def s(self) -> int:
        return len(self.relators)

    def exponent_sums(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.n
            for a in r:
                row[abs(a) - 1] += 1 if a > 0 else -1
            rows.append(row)
        return rows


def zvk_presentation(md: MonodromyData, A: Arrangement | None = None) -> GroupPresentation:
    """Generators are the strands at the base point; m - 1 relators per event.

    For an event with tail T and local full twist S on the block of positions
    b..b+m-1, the local loops x_p carried back along T are w_p = T^{-1}(x_p),
    and beta = T S T^{-1} fixes each w_p.  The relator for the last block
    position is a consequence of the others and is dropped.  The complete
    relator set beta(x_i) x_i^{-1}, i = 1..n, is kept alongside for auditing.
    """
    n = md.n
    relators = []
    full = []
    for ev in md.events:
        beta = ev.braid
        back = ev.tail.inverse()
        for p in range(ev.block, ev.block + ev.multiplicity - 1):
            w = braid_action(back, (p,))
            r = free_reduce(braid_action(beta, w) + invert(w))
            relators.append(r)
        for i in range(1, n + 1):
            r = free_reduce(braid_action(beta, (i,)) + (-i,))
            if r:
                full.append(r)
    pres = GroupPresentation(n, tuple(relators), tuple(full))
    A = A or md.affine.source
    chi = euler_complement(A, intersection_lattice(A) if A.d > 1 else None)
    if 1 - pres.n + pres.s != chi:
        raise InternalError(f"Euler audit failed: 1 - {pres.n} + {pres.s} != {chi}")
    if any(any(row) for row in pres.exponent_sums()):
        raise InternalError("a relator is not in the commutator subgroup")
    return pres


@dataclass(frozen=True)
class Character:
    """gamma_i -> lambda = zeta_d^exponent on every generator."""

    d: int
    exponent: int

    @property
    def value(self) -> CycNumber:
        return CycNumber.zeta(self.d, self.exponent % self.d) if self.d > 1 else CycNumber.one()

    @property
    def trivial(self) -> bool:
        return self.exponent % self.d == 0


def fox_polynomials(relator: Word, n: int, d: int) -> list[dict[int, int]]:
    """Fox derivatives at the diagonal character, as integer polynomials in lambda mod lambda^d - 1."""
    rows = [dict() for _ in range(n)]
    height = 0
    for a in relator:
        j = abs(a) - 1
        if a > 0:
            e, c = height % d, 1
            height += 1
        else:
            height -= 1
            e, c = height % d, -1
        rows[j][e] = rows[j].get(e, 0) + c
    return rows


def _evaluate(poly: dict[int, int], chi: Character) -> CycNumber:
    total = CycNumber.zero(chi.d)
    for e, c in poly.items():
        if c:
            total = total + CycNumber.zeta(chi.d, (e * chi.exponent) % chi.d) * c
    return total


def fox_jacobian(p: GroupPresentation, chi: Character, relators=None) -> CycMatrix:
    relators = p.relators if relators is None else relators
    rows = []
    for r in relators:
        rows.append([_evaluate(poly, chi) for poly in fox_polynomials(r, p.n, chi.d)])
    return CycMatrix.from_rows(rows, p.n) if rows else CycMatrix.zeros(0, p.n, chi.d)


def local_system_h1(p: GroupPresentation, chi: Character, audit: bool = True) -> int:
    """dim H^1 of the presentation complex with coefficients twisted by chi."""
    r = rank(fox_jacobian(p, chi)) if p.relators else 0
    if audit and p.full_relators:
        full = rank(fox_jacobian(p, chi, p.full_relators))
        if full != r:
            raise InternalError(f"reduced relators have Jacobian rank {r}, the full set {full}")
    if not chi.trivial and p.n == 0:
        return 0
    return p.n - r - (0 if chi.trivial else 1)


@dataclass(frozen=True)
class Spectrum:
    d: int
    dims: dict[int, int]  # exponent e of lambda = zeta_d^e -> dim H^1(F)_lambda
    monodromy_order: int

    @property
    def b1F(self) -> int:
        return sum(self.dims.values())

    def nontrivial(self) -> dict[int, int]:
        return {e: v for e, v in self.dims.items() if e and v}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ARRANGETOP_THREADS", "1")))
    except ValueError:
        return 1


def _h1_task(args):
    p, d, e = args
    return local_system_h1(p, Character(d, e))


def presentation_for(A: Arrangement, infinity_index: int = 1, direction_skip: int = 0,
                     basepoint_shift: Fraction = Fraction(0)) -> GroupPresentation:
    if A.d == 1:
        return GroupPresentation(0, ())
    md = braid_monodromy(decone(A, infinity_index), direction_skip, basepoint_shift)
    return zvk_presentation(md, A)


def spectrum_from_presentation(p: GroupPresentation, d: int) -> Spectrum:
    threads = _threads()
    tasks = [(p, d, e) for e in range(d)]
    if threads > 1 and d > 1:
        with ProcessPoolExecutor(max_workers=min(threads, d)) as pool:
            values = list(pool.map(_h1_task, tasks))
    else:
        values = [_h1_task(t) for t in tasks]
    spec = Spectrum(d, dict(enumerate(values)), d)
    if spec.dims[0] != d - 1:
        raise InconsistentSpectrum(f"eigenvalue-one part has dimension {spec.dims[0]}, expected {d - 1}")
    for e in range(1, d):
        if spec.dims[e] != spec.dims[(-e) % d]:
            raise InconsistentSpectrum("spectrum is not symmetric under complex conjugation")
    return spec


def milnor_spectrum(A: Arrangement, infinity_index: int = 1, **options) -> Spectrum:
    """dim H^1(F)_lambda for every d-th root of unity lambda."""
    if not 1 <= infinity_index <= A.d:
        raise ValidationError(f"infinity index {infinity_index} out of range 1..{A.d}")
    return spectrum_from_presentation(presentation_for(A, infinity_index, **options), A.d)


# -- oracle: the d-fold cyclic cover of the presentation complex --------------


def _rank_q(rows: list[list[int]]) -> int:
    """Rank over Q by plain Gaussian elimination on Fractions."""
    m = [[Fraction(v) for v in row] for row in rows if any(row)]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def cover_b1(p: GroupPresentation, d: int) -> int:
    """b_1 of the d-fold cyclic cover of the presentation complex (every generator -> 1)."""
    if p.n == 0:
        return 0
    edge = {(j, g): (j - 1) * d + g for j in range(1, p.n + 1) for g in range(d)}
    d1 = []
    for (j, g), col in sorted(edge.items(), key=lambda t: t[1]):
        row = [0] * d
        row[(g + 1) % d] += 1
        row[g] -= 1
        d1.append(row)
    d2 = []
    for r in p.relators:
        for g in range(d):
            row = [0] * (p.n * d)
            h = g
            for a in r:
                if a > 0:
                    row[edge[(a, h)]] += 1
                    h = (h + 1) % d
                else:
                    h = (h - 1) % d
                    row[edge[(-a, h)]] -= 1
            if h != g:
                raise InternalError("relator does not lift to a closed loop")
            d2.append(row)
    rank1 = _rank_q(d1)
    rank2 = _rank_q(d2) if d2 else 0
    return p.n * d - rank1 - rank2


def spectrum_crosscheck(A: Arrangement, infinity_index: int = 1) -> bool:
    p = presentation_for(A, infinity_index)
    spec = spectrum_from_presentation(p, A.d)
    return cover_b1(p, A.d) == spec.b1F


__all__ = [
    "Character",
    "GroupPresentation",
    "Spectrum",
    "braid_action",
    "cover_b1",
    "fox_jacobian",
    "free_reduce",
    "local_system_h1",
    "milnor_spectrum",
    "presentation_for",
    "spectrum_crosscheck",
    "spectrum_from_presentation",
    "zvk_presentation",
]
