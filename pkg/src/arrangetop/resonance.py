"""Degree <= 2 Orlik-Solomon algebra and the first resonance variety of M.

Weight vectors a = (a_1, ..., a_d) with sum zero are the degree-one classes of
the projective complement.  The resonance dimension of a is the first
cohomology of the complex (A, a ^ -) restricted to zero-sum classes.
Only local components and components from nets are produced; this is not a
claim that the list is complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, IntersectionLattice, euler_complement, intersection_lattice
from .cyclo import CycMatrix, CycNumber, lcm, rank
from .errors import InternalError, NotInTorusLie


@dataclass(frozen=True)
class OSAlgebra:
    """Degree-two part of the OS algebra of the cone, in the no-broken-circuit basis.

    A pair {j, k} (j < k) is an nbc pair when j is the smallest line through the
    point where j and k meet.
    """

    d: int
    lattice: IntersectionLattice
    basis2: tuple[tuple[int, int], ...]
    index2: dict
    b1: int
    b2: int

    @property
    def dim_a2(self) -> int:
        return len(self.basis2)

    def wedge_basis(self, j: int, k: int) -> dict[int, int]:
        """Coordinates of e_j ^ e_k (1-based lines) in the nbc basis."""
        if j == k:
            return {}
        sign = 1
        if j > k:
            j, k, sign = k, j, -1
        p = self.lattice.point_of(j, k)
        i0 = p.incident[0]
        if i0 == j:
            return {self.index2[(j, k)]: sign}
        # e_j e_k = e_i0 e_k - e_i0 e_j
        return {self.index2[(i0, k)]: sign, self.index2[(i0, j)]: -sign}

    def wedge(self, a, c) -> list[CycNumber]:
        n = _conductor(list(a) + list(c))
        out = [CycNumber.zero(n) for _ in self.basis2]
        for i in range(self.d):
            if not a[i]:
                continue
            for j in range(self.d):
                if i == j or not c[j]:
                    continue
                coeff = a[i] * c[j]
                for idx, s in self.wedge_basis(i + 1, j + 1).items():
                    out[idx] = out[idx] + coeff * s
        return out


def _conductor(values) -> int:
    n = 1
    for v in values:
        if isinstance(v, CycNumber):
            n = lcm(n, v.conductor)
    return n


def build_os(A: Arrangement, lattice: IntersectionLattice | None = None) -> OSAlgebra:
    lattice = lattice or (intersection_lattice(A) if A.d > 1 else IntersectionLattice(A.d, ()))
    basis2 = []
    for p in lattice.points:
        i0 = p.incident[0]
        basis2.extend((i0, k) for k in p.incident[1:])
    basis2.sort()
    index2 = {pair: n for n, pair in enumerate(basis2)}
    b1 = A.d - 1
    b2 = len(basis2) - b1 if A.d > 1 else 0
    if b2 != euler_complement(A, lattice) - 1 + b1:
        raise InternalError("OS degree-two dimension disagrees with the Euler characteristic")
    return OSAlgebra(A.d, lattice, tuple(basis2), index2, b1, b2)


def resonance_dim(os: OSAlgebra, a) -> int:
    """dim H^1 of (A^0 -> A^1 -> A^2, a ^ -) on zero-sum classes."""
    a = list(a)
    if len(a) != os.d:
        raise ValueError(f"expected {os.d} weights")
    n = _conductor(a)
    a = [x if isinstance(x, CycNumber) else CycNumber.rational(x, n) for x in a]
    if sum(a, CycNumber.zero(n)):
        raise NotInTorusLie("weights must sum to zero")
    if os.d == 1:
        return 0
    columns = []
    for j in range(os.d):
        e = [CycNumber.zero(n)] * os.d
        e[j] = CycNumber.one(n)
        columns.append(os.wedge(a, e))
    rows = [[columns[j][r] for j in range(os.d)] for r in range(os.dim_a2)]
    rows.append([CycNumber.one(n)] * os.d)
    kernel_dim = os.d - rank(CycMatrix.from_rows(rows, os.d))
    return kernel_dim - (1 if any(a) else 0)


@dataclass(frozen=True)
class NetPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(i for b in self.blocks for i in b))

    def canonical(self) -> NetPartition:
        return NetPartition(tuple(sorted(self.blocks)))

    def is_trivial(self) -> bool:
        """Singleton blocks: a set of concurrent lines, i.e. a local component."""
        return all(len(b) == 1 for b in self.blocks)


def is_net(lattice: IntersectionLattice, net: NetPartition) -> bool:
    if net.k < 3 or any(not b for b in net.blocks):
        return False
    owner = {}
    for bi, block in enumerate(net.blocks):
        for line in block:
            if line in owner:
                return False
            owner[line] = bi
    for p in lattice.points:
        present = [owner[i] for i in p.incident if i in owner]
        if len(set(present)) >= 2 and sorted(present) != list(range(net.k)):
            return False
    return True


@dataclass(frozen=True)
class ResonanceComponent:
    kind: str
    support: tuple[int, ...]
    dimension: int
    basis: tuple[tuple[CycNumber, ...], ...]
    point_index: int | None = None
    net: NetPartition | None = None


def local_components(A: Arrangement, os: OSAlgebra | None = None) -> list[ResonanceComponent]:
    os = os or build_os(A)
    comps = []
    n = A.conductor
    for idx, p in enumerate(os.lattice.points):
        if p.multiplicity < 3:
            continue
        i0 = p.incident[0]
        basis = []
        for i in p.incident[1:]:
            v = [CycNumber.zero(n)] * A.d
            v[i - 1] = CycNumber.one(n)
            v[i0 - 1] = -CycNumber.one(n)
            basis.append(tuple(v))
        comps.append(ResonanceComponent("local", p.incident, p.multiplicity - 1, tuple(basis), point_index=idx))
    return comps


def net_search(A: Arrangement, max_k: int | None = None, include_trivial: bool = False,
               lattice: IntersectionLattice | None = None) -> list[NetPartition]:
    """Exhaustive search for nets on sub-arrangements, up to block relabeling.

    Lines are decided in index order; each is either left out or placed in a
    block, with new blocks opened in order of first use so that every partition
    is produced once.  A partial assignment is abandoned as soon as some point
    carries lines from two blocks and two lines from one block.
    """
    lattice = lattice or intersection_lattice(A)
    top = max((p.multiplicity for p in lattice.points), default=0)
    max_k = top if max_k is None else min(max_k, top)
    if max_k < 3:
        return []
    points_on = [[] for _ in range(A.d + 1)]
    for p in lattice.points:
        for i in p.incident:
            points_on[i].append(p.incident)
    assign = [None] * (A.d + 1)
    found = set()

    def consistent(line: int) -> bool:
        for inc in points_on[line]:
            blocks = [assign[i] for i in inc if assign[i] is not None]
            if len(set(blocks)) >= 2 and len(blocks) != len(set(blocks)):
                return False
        return True

    def finish(nblocks: int) -> None:
        if nblocks < 3:
            return
        blocks = [[] for _ in range(nblocks)]
        for i in range(1, A.d + 1):
            if assign[i] is not None:
                blocks[assign[i]].append(i)
        net = NetPartition(tuple(tuple(b) for b in blocks)).canonical()
        if is_net(lattice, net) and (include_trivial or not net.is_trivial()):
            found.add(net.blocks)

    def extend(line: int, nblocks: int) -> None:
        if line > A.d:
            finish(nblocks)
            return
        assign[line] = None
        extend(line + 1, nblocks)
        for b in range(min(nblocks + 1, max_k)):
            assign[line] = b
            if consistent(line):
                extend(line + 1, max(nblocks, b + 1))
        assign[line] = None

    extend(1, 0)
    return [NetPartition(b) for b in sorted(found)]


def net_component(A: Arrangement, net: NetPartition) -> ResonanceComponent:
    """Weights constant on blocks with block constants summing to zero."""
    n = A.conductor
    first = net.blocks[0]
    basis = []
    for block in net.blocks[1:]:
        v = [CycNumber.zero(n)] * A.d
        for i in block:
            v[i - 1] = CycNumber.one(n)
        for i in first:
            v[i - 1] = -CycNumber.one(n)
        basis.append(tuple(v))
    return ResonanceComponent("global", net.support, net.k - 1, tuple(basis), net=net)


def resonance_components(A: Arrangement, os: OSAlgebra | None = None) -> list[ResonanceComponent]:
    os = os or build_os(A)
    comps = local_components(A, os)
    if A.d >= 3:
        comps += [net_component(A, net) for net in net_search(A, lattice=os.lattice)]
    return comps


def components_independent(vectors_a, vectors_b) -> bool:
    """True when the spans of the two vector lists meet only in zero."""
    stacked = [list(v) for v in vectors_a] + [list(v) for v in vectors_b]
    if not stacked:
        return True
    return rank(CycMatrix.from_rows(stacked)) == (
        rank(CycMatrix.from_rows([list(v) for v in vectors_a])) if vectors_a else 0
    ) + (rank(CycMatrix.from_rows([list(v) for v in vectors_b])) if vectors_b else 0)


__all__ = [
    "NetPartition",
    "OSAlgebra",
    "ResonanceComponent",
    "build_os",
    "components_independent",
    "is_net",
    "local_components",
    "net_component",
    "net_search",
    "resonance_components",
    "resonance_dim",
]
