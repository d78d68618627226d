"""Dense exact linear algebra over a coefficient field.

Matrices are lists of rows of field elements.  Used by the linear-algebra
verification lane (graded-piece dimension counts, truncated-ring
computations); kept deliberately independent of the Groebner engine.
"""

from __future__ import annotations

from typing import List, Sequence

from .rings import Field


def mat_mul_vec(M: Sequence[Sequence], v: Sequence, F: Field) -> list:
    out = []
    for row in M:
        acc = F.zero()
        for a, b in zip(row, v):
            acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def rref(M: Sequence[Sequence], F: Field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in M]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not F.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M: Sequence[Sequence], F: Field) -> int:
    return len(rref(M, F)[0])


def nullspace(M: Sequence[Sequence], F: Field, ncols: int) -> List[list]:
    """Basis of {v : M v = 0}; `ncols` needed when M has no rows."""
    if not M:
        return [[F.one() if i == j else F.zero() for j in range(ncols)]
                for i in range(ncols)]
    R, pivots = rref(M, F)
    n = len(M[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero()] * n
        v[fc] = F.one()
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis


def rank_extension(base: Sequence[Sequence], extra: Sequence[Sequence],
                   F: Field) -> int:
    """rank(base + extra) - rank(base): dimension added by `extra`."""
    rb = rank(list(base), F)
    return rank(list(base) + list(extra), F) - rb
