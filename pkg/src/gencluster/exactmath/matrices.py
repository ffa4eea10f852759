"""Integer matrix utilities: Smith normal form, rank, linear solvability.

The Smith normal form reports cokernel data only (invariant factors of the
row lattice plus the free rank of the quotient), which is what class-group
computations consume; transformation matrices are tracked internally only
where solvability tests need them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

IntMatrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class SmithResult:
    """Cokernel of Z^cols by the row span of the input matrix."""

    invariant_factors: tuple[int, ...]  # d_1 | d_2 | ... , all >= 1
    free_rank: int                      # cols - rank
    torsion: tuple[int, ...]            # invariant factors > 1
    cols: int

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(rows: IntMatrix, ncols: Optional[int] = None) -> SmithResult:
    """Invariant factors of the subgroup of Z^ncols generated by the rows."""
    m = [list(map(int, r)) for r in rows]
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for an empty row set")
        ncols = len(m[0])
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    diag = _smith_diagonal(m, len(m), ncols)
    factors = tuple(d for d in diag if d != 0)
    return SmithResult(
        invariant_factors=factors,
        free_rank=ncols - len(factors),
        torsion=tuple(d for d in factors if d > 1),
        cols=ncols,
    )


def _smith_diagonal(m: list[list[int]], nrows: int, ncols: int) -> list[int]:
    diag: list[int] = []
    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # Clear column t.
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            # Clear row t.
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            # Enforce divisibility of the remaining block by the pivot.
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                m[t][j] += m[offender][j]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def rational_rank(rows: IntMatrix) -> int:
    """Rank over the rationals by fraction Gaussian elimination."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        sel = None
        for i in range(rank, len(m)):
            if m[i][col]:
                sel = i
                break
        if sel is None:
            col += 1
            continue
        m[rank], m[sel] = m[sel], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def solve_integer_system(a: IntMatrix, b: Sequence[int]) -> bool:
    """Decide whether ``a @ z = b`` has an integer solution ``z``."""
    m = [list(map(int, r)) for r in a]
    rhs = list(map(int, b))
    if len(m) != len(rhs):
        raise ValueError("dimension mismatch")
    if not m:
        return True
    ncols = len(m[0])
    nrows = len(m)
    # Track row operations in p so that conditions apply to p @ b.
    p = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    diag = _smith_diagonal_tracked(m, p, nrows, ncols)
    pb = [sum(p[i][j] * rhs[j] for j in range(nrows)) for i in range(nrows)]
    for i in range(nrows):
        if i < len(diag):
            if pb[i] % diag[i]:
                return False
        elif pb[i]:
            return False
    return True


def _smith_diagonal_tracked(m: list[list[int]], p: list[list[int]],
                            nrows: int, ncols: int) -> list[int]:
    diag: list[int] = []
    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        p[t], p[pi] = p[pi], p[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    for j in range(nrows):
                        p[i][j] -= q * p[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        p[t], p[i] = p[i], p[t]
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                m[t][j] += m[offender][j]
            for j in range(nrows):
                p[t][j] += p[offender][j]
        diag.append(m[t][t])
        t += 1
    return diag


def solve_gf2(a: Sequence[Sequence[int]], b: Sequence[int]) -> bool:
    """Decide solvability of ``a @ z = b`` over the field with two elements."""
    rows = [[v & 1 for v in r] + [rhs & 1] for r, rhs in zip(a, b)]
    if not rows:
        return True
    ncols = len(rows[0]) - 1
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return all(any(r[:-1]) or not r[-1] for r in rows)
