"""Exact linear algebra over cyclotomic fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import CycNumber, lcm


def _as_cyc(x, conductor: int) -> CycNumber:
    if isinstance(x, CycNumber):
        return x.coerce(conductor) if x.conductor != conductor else x
    return CycNumber.rational(Fraction(x), conductor)


@dataclass(frozen=True)
class CycMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[CycNumber, ...], ...]

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> CycMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        conductor = 1
        for r in rows:
            for x in r:
                if isinstance(x, CycNumber):
                    conductor = lcm(conductor, x.conductor)
        entries = tuple(tuple(_as_cyc(x, conductor) for x in r) for r in rows)
        return cls(len(rows), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int = 1) -> CycMatrix:
        z = CycNumber.zero(conductor)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> CycMatrix:
        z, o = CycNumber.zero(conductor), CycNumber.one(conductor)
        return cls(n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def conductor(self) -> int:
        for r in self.entries:
            for x in r:
                return x.conductor
        return 1

    def __matmul__(self, vec):
        """Matrix times column vector."""
        n = self.conductor
        out = []
        for r in self.entries:
            acc = CycNumber.zero(n)
            for x, v in zip(r, vec):
                if x and v:
                    acc = acc + x * v
            out.append(acc)
        return out

    def permuted(self, row_perm, col_perm) -> CycMatrix:
        return CycMatrix(
            self.rows,
            self.cols,
            tuple(tuple(self.entries[i][j] for j in col_perm) for i in row_perm),
        )


def rank(m: CycMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Each step cross-multiplies by the pivot and divides exactly by the previous
    pivot, so only one inverse per pivot is ever formed.
    """
    a = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    prev = None
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        prev_inv = prev.inv() if prev is not None else None
        for i in range(r + 1, nrows):
            lead = a[i][c]
            row = a[i]
            prow = a[r]
            for j in range(c + 1, ncols):
                v = piv * row[j]
                if lead and prow[j]:
                    v = v - lead * prow[j]
                if prev_inv is not None and v:
                    v = v * prev_inv
                row[j] = v
            row[c] = CycNumber.zero(piv.conductor)
        prev = piv
        r += 1
    return r


def rref(m: CycMatrix) -> tuple[list[list[CycNumber]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inv()
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel(m: CycMatrix) -> list[list[CycNumber]]:
    n = m.conductor
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [CycNumber.zero(n) for _ in range(m.cols)]
        v[f] = CycNumber.one(n)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank_kernel(m: CycMatrix) -> tuple[int, list[list[CycNumber]]]:
    r = rank(m)
    basis = kernel(m)
    if r + len(basis) != m.cols:
        raise ArithmeticError("rank-nullity mismatch")  # pragma: no cover
    return r, basis


def solve(m: CycMatrix, rhs) -> list[CycNumber] | None:
    """One solution of m x = rhs, or None when inconsistent."""
    n = m.conductor
    for b in rhs:
        if isinstance(b, CycNumber):
            n = lcm(n, b.conductor)
    aug = CycMatrix.from_rows([list(r) + [_as_cyc(b, n)] for r, b in zip(m.entries, rhs)], m.cols + 1)
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [CycNumber.zero(aug.conductor) for _ in range(m.cols)]
    for row, pc in zip(reduced, pivots):
        x[pc] = row[m.cols]
    return x
