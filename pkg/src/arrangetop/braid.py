"""Exact braid monodromy of a deconed line arrangement.

Over a segment x(s) = P + s(Q - P) of the base, every root y_i = a_i x + b_i
moves affinely in s.  Projected to a real direction, two strands meet at the
root of a linear equation over the field, so every crossing time and every
over/under decision is exact.

Fiber conventions: positions are ordered by r = Re(conj(theta) y), the fiber
base point sits at o = Im(conj(theta) y) = -infinity, and sigma_k is the
half-twist in which the strand at position k passes below the one at k + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .arrangement import Arrangement, cross, intersection_lattice
from .cyclo import CycNumber, compare_real, lcm
from .cyclo.sign import positive_rational_below, rational_below
from .errors import GenericityFailure, InternalError, ValidationError

MAX_SHEARS = 200
MAX_DIRECTIONS = 40


def shear_sequence():
    yield Fraction(0)
    for k in range(1, MAX_SHEARS):
        yield Fraction(k)
        yield Fraction(-k)
        yield Fraction(1, k + 1)
        yield Fraction(-1, k + 1)


def direction_sequence():
    """theta = 1, then 1 + i/p for p = 7, 11, 13, ... (primes from 7 on)."""
    yield CycNumber.one(4)
    p = 7
    count = 1
    while count < MAX_DIRECTIONS:
        if all(p % q for q in range(2, int(p**0.5) + 1)):
            yield CycNumber.one(4) + CycNumber.zeta(4) * Fraction(1, p)
            count += 1
        p += 2


@dataclass(frozen=True)
class AffineArrangement:
    """Lines y = slope*x + intercept, after sending one line of A to infinity."""

    lines: tuple[tuple[CycNumber, CycNumber], ...]
    source: Arrangement
    infinity_index: int
    original_index: tuple[int, ...]  # original 1-based index of each affine line
    parallel_classes: tuple[tuple[int, ...], ...]
    points: tuple[tuple[CycNumber, tuple[int, ...]], ...]  # (x, affine lines through it)
    transform: tuple[tuple[CycNumber, ...], ...]
    shear: Fraction

    @property
    def n(self) -> int:
        return len(self.lines)

    def y(self, i: int, x: CycNumber) -> CycNumber:
        a, b = self.lines[i]
        return a * x + b


def _det(m) -> CycNumber:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def decone(A: Arrangement, infinity_index: int, shears=None) -> AffineArrangement:
    """Send line `infinity_index` (1-based) to infinity and pick generic affine coordinates."""
    if not 1 <= infinity_index <= A.d:
        raise ValidationError(f"infinity index {infinity_index} out of range 1..{A.d}")
    n = A.conductor
    ell = A.lines[infinity_index - 1].coeffs
    lattice = intersection_lattice(A) if A.d > 1 else None
    units = [tuple(CycNumber.one(n) if j == i else CycNumber.zero(n) for j in range(3)) for i in range(3)]
    for ui, vi in ((0, 1), (0, 2), (1, 2)):
        if _det((units[ui], units[vi], ell)):
            u, v = units[ui], units[vi]
            break
    keep = [i for i in range(A.d) if i != infinity_index - 1]
    affine_points = [p for p in (lattice.points if lattice else ()) if A.lines[infinity_index - 1](p.point)]
    at_infinity = [p for p in (lattice.points if lattice else ()) if not A.lines[infinity_index - 1](p.point)]
    for t in shears if shears is not None else shear_sequence():
        r1 = tuple(a + b * t for a, b in zip(u, v))
        M = (r1, v, ell)
        det = _det(M)
        cols = (cross(M[1], M[2]), cross(M[2], M[0]), cross(M[0], M[1]))
        lines = []
        for i in keep:
            c = A.lines[i].coeffs
            cp = [sum((c[r] * col[r] for r in range(3)), CycNumber.zero(n)) / det for col in cols]
            if not cp[1]:
                break
            lines.append((-cp[0] / cp[1], -cp[2] / cp[1]))
        else:
            xs = []
            for p in affine_points:
                w = [sum((M[r][c] * p.point[c] for c in range(3)), CycNumber.zero(n)) for r in range(3)]
                xs.append(w[0] / w[2])
            if len(set(xs)) == len(xs):
                return _assemble(A, infinity_index, keep, lines, affine_points, at_infinity, xs, M, t)
    raise GenericityFailure("no shear in the search sequence gives generic affine coordinates")


def _assemble(A, infinity_index, keep, lines, affine_points, at_infinity, xs, M, t) -> AffineArrangement:
    position = {orig: k for k, orig in enumerate(keep)}
    points = []
    for p, x in zip(affine_points, xs):
        points.append((x, tuple(position[i - 1] + 1 for i in p.incident)))
    classes: dict = {}
    for k, (slope, _b) in enumerate(lines):
        classes.setdefault(slope, []).append(k + 1)
    parallel = tuple(tuple(c) for c in classes.values() if len(c) > 1)
    expected = sorted(
        c for c in (tuple(position[i - 1] + 1 for i in p.incident if i != infinity_index) for p in at_infinity)
        if len(c) > 1
    )
    if sorted(parallel) != expected:
        raise InternalError("parallel classes do not match the points on the line at infinity")
    return AffineArrangement(
        tuple(lines), A, infinity_index, tuple(i + 1 for i in keep), parallel, tuple(points), M, t
    )


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for a in self.letters:
            if a == 0 or abs(a) >= self.n:
                raise ValueError(f"generator {a} out of range for {self.n} strands")

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-a for a in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[k] = starting position of the strand that ends at position k (0-based)."""
        perm = list(range(self.n))
        for a in self.letters:
            k = abs(a) - 1
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
        return tuple(perm)

    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(self.n))


@dataclass(frozen=True)
class MonodromyEvent:
    x: CycNumber
    multiplicity: int
    lines: tuple[int, ...]  # affine line indices through the point
    tail: BraidWord
    local: BraidWord
    block: int  # first position (1-based) of the local block at the end of the tail

    @property
    def braid(self) -> BraidWord:
        return self.tail * self.local * self.tail.inverse()


@dataclass(frozen=True)
class MonodromyData:
    affine: AffineArrangement
    basepoint: CycNumber
    strand_order: tuple[int, ...]  # affine line index at each position of the base fiber
    events: tuple[MonodromyEvent, ...]
    direction: CycNumber
    geometry: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return self.affine.n


class _Retry(Exception):
    pass


def _lex_cmp(a: CycNumber, b: CycNumber) -> int:
    c = compare_real(a.real_part(), b.real_part())
    return c if c else compare_real(a.imag_part(), b.imag_part())


class _Tracker:
    """Follows the strands along polygonal paths for one projection direction."""

    def __init__(self, aa: AffineArrangement, theta: CycNumber):
        self.aa = aa
        self.tbar = theta.conj()

    def rotated(self, i: int, x: CycNumber) -> CycNumber:
        return self.tbar * self.aa.y(i, x)

    def order_at(self, x: CycNumber) -> list[int]:
        r = [self.rotated(i, x).real_part() for i in range(self.aa.n)]

        def cmp(i, j):
            c = compare_real(r[i], r[j])
            if c == 0:
                raise _Retry
            return c

        return sorted(range(self.aa.n), key=cmp_to_key(cmp))

    def segment(self, P: CycNumber, Q: CycNumber, order: list[int]) -> tuple[list[int], list[int]]:
        """Letters emitted along P -> Q and the order at Q."""
        end = self.order_at(Q)
        rank_start = {line: k for k, line in enumerate(order)}
        rank_end = {line: k for k, line in enumerate(end)}
        crossings = []
        n = self.aa.n
        for i in range(n):
            for j in range(i + 1, n):
                if (rank_start[i] < rank_start[j]) != (rank_end[i] < rank_end[j]):
                    d0 = (self.rotated(i, P) - self.rotated(j, P)).real_part()
                    d1 = (self.rotated(i, Q) - self.rotated(j, Q)).real_part()
                    crossings.append((d0 / (d0 - d1), i, j))

        crossings.sort(key=cmp_to_key(lambda a, b: compare_real(a[0], b[0])))
        letters = []
        current = list(order)
        start = 0
        while start < len(crossings):
            stop = start + 1
            while stop < len(crossings) and compare_real(crossings[start][0], crossings[stop][0]) == 0:
                stop += 1
            x = P + (Q - P) * crossings[start][0]
            for group in _components(crossings[start:stop]):
                letters.extend(self._pass(x, group, current))
            start = stop
        if current != end:
            raise InternalError("strand order after crossings disagrees with the endpoint order")
        return letters, end

    def _pass(self, x: CycNumber, group: set[int], current: list[int]) -> list[int]:
        """Strands of `group` share r at x and all swap: reverse their block in place.

        They sit at distinct heights o throughout a short time window, so the
        braid is the reversal in which the lower strand of each swap passes
        below; bubble sort realizes it.
        """
        positions = sorted(current.index(line) for line in group)
        g = len(positions)
        k = positions[0]
        if positions != list(range(k, k + g)):
            raise InternalError("crossing strands are not adjacent")
        o = {line: self.rotated(line, x).imag_part() for line in group}
        letters = []
        for a in range(g - 1):
            for b in range(k, k + g - 1 - a):
                left, right = current[b], current[b + 1]
                below = compare_real(o[left], o[right])
                if below == 0:
                    raise GenericityFailure("the path runs through a critical value")
                letters.append(b + 1 if below < 0 else -(b + 1))
                current[b], current[b + 1] = right, left
        return letters

    def path(self, vertices, order):
        letters = []
        for P, Q in zip(vertices, vertices[1:]):
            new, order = self.segment(P, Q, order)
            letters.extend(new)
        return letters, order


def _components(crossings) -> list[set[int]]:
    """Group simultaneous crossing pairs into sets of mutually tied strands."""
    groups: list[set[int]] = []
    for _s, i, j in crossings:
        hit = [g for g in groups if i in g or j in g]
        merged = {i, j}.union(*hit)
        groups = [g for g in groups if g not in hit] + [merged]
    pairs = {(i, j) for _s, i, j in crossings}
    for g in groups:
        if sum(1 for i in g for j in g if (i, j) in pairs) != len(g) * (len(g) - 1) // 2:
            raise _Retry  # a tied block that does not fully reverse
    return groups


def _frame(aa: AffineArrangement, values: list[CycNumber], basepoint_shift: Fraction):
    """Tilt kappa, square radius rho, corridor height Y0 and basepoint abscissa X0."""
    ell_values = None
    kappa = None
    for m in range(0, 64):
        kappa = Fraction(1, 2**m)
        ell = [c.real_part() + c.imag_part() * kappa for c in values]
        ok = all(compare_real(ell[i], ell[i + 1]) < 0 for i in range(len(ell) - 1))
        if ok:
            ell_values = ell
            break
    if ell_values is None:
        raise GenericityFailure("no tilt separates the critical values")
    if len(ell_values) > 1:
        gap = min(
            (positive_rational_below(ell_values[i + 1] - ell_values[i]) for i in range(len(ell_values) - 1))
        )
        rho = gap / (4 * (1 + kappa))
    else:
        rho = Fraction(1)
    low = min(rational_below(c.imag_part()) for c in values)
    Y0 = Fraction(int(low - 2 * rho - 1) - 1) - basepoint_shift
    left = min(rational_below(e) for e in ell_values) - kappa * Y0
    X0 = Fraction(int(left) - 2) - basepoint_shift
    return kappa, rho, Y0, X0, ell_values


def _event(tracker: _Tracker, x0, q, x, c, through, kappa, rho, base_order) -> MonodromyEvent:
    """Lasso around c: tail x0 -> q -> e, then the square of radius rho_c counterclockwise.

    rho_c starts at the global radius and is halved until, along the square,
    only the strands through c cross each other.
    """
    aa = tracker.aa
    i = CycNumber.zeta(4)
    m = len(through)
    members = {line - 1 for line in through}
    r_c = tracker.rotated(through[0] - 1, c).real_part()
    for k in range(aa.n):
        if k not in members and compare_real(tracker.rotated(k, c).real_part(), r_c) == 0:
            raise _Retry  # another strand projects onto the critical point
    for _ in range(64):
        e = c + kappa * rho - i * rho
        corners = [c + rho - i * rho, c + rho + i * rho, c - rho + i * rho, c - rho - i * rho]
        tail, order = tracker.path([x0, q, e], base_order)
        positions = sorted(order.index(line) for line in members)
        adjacent = positions == list(range(positions[0], positions[0] + m))
        if adjacent:
            local, back = tracker.path([e, *corners, e], order)
            if len(local) == m * (m - 1) and all(a > 0 for a in local):
                if back != order:
                    raise InternalError("local loop does not return to its starting order")
                ev = MonodromyEvent(x, m, through, BraidWord(aa.n, tuple(tail)),
                                    BraidWord(aa.n, tuple(local)), positions[0] + 1)
                if not ev.local.is_pure():
                    raise InternalError("local braid is not pure")
                return ev
        rho = rho / 2
    raise GenericityFailure("could not isolate the strands through a critical point")


def braid_monodromy(aa: AffineArrangement, direction_skip: int = 0,
                    basepoint_shift: Fraction = Fraction(0)) -> MonodromyData:
    """Braids of lassos around every critical value, visited in (Re, Im) order."""
    n_field = lcm(aa.source.conductor, 4)
    points = sorted(aa.points, key=cmp_to_key(lambda a, b: _lex_cmp(a[0], b[0])))
    values = [p[0].coerce(n_field) for p in points]
    if values:
        kappa, rho, Y0, X0, ell = _frame(aa, values, basepoint_shift)
    else:
        kappa, rho, Y0, X0, ell = Fraction(0), Fraction(0), Fraction(-1), Fraction(-1), []
    i = CycNumber.zeta(4)
    x0 = (i * Y0 + X0).coerce(n_field)
    directions = list(direction_sequence())[direction_skip:]
    for theta in directions:
        tracker = _Tracker(aa, theta)
        try:
            base_order = tracker.order_at(x0)
            events = []
            for (x, through), c, lv in zip(points, values, ell):
                q = (i * Y0 + (lv - kappa * Y0)).coerce(n_field)
                events.append(_event(tracker, x0, q, x, c, through, kappa, rho, base_order))
        except _Retry:
            continue
        return MonodromyData(
            aa, x0, tuple(line + 1 for line in base_order), tuple(events), theta,
            {"kappa": kappa, "rho": rho, "Y0": Y0, "X0": X0},
        )
    raise GenericityFailure("every projection direction in the sequence hit a tie")


def total_exponent_sum(md: MonodromyData) -> int:
    return sum(ev.braid.exponent_sum() for ev in md.events)


__all__ = [
    "AffineArrangement",
    "BraidWord",
    "MonodromyData",
    "MonodromyEvent",
    "braid_monodromy",
    "decone",
    "total_exponent_sum",
]
