"""Small exact dense linear algebra over a coefficient field.

Rows are Python lists of field elements.  Sizes stay in the hundreds, so a
straightforward fraction-free-ish Gaussian elimination is plenty.
"""
from __future__ import annotations


def echelon(rows: list[list], field):
    """Row-reduce in place (returning pivot column list); rows may shrink."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][col]):
                c = rows[i][col]
                rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    del rows[r:]
    return pivots


def rank(rows: list[list], field) -> int:
    work = [list(r) for r in rows]
    if not work:
        return 0
    return len(echelon(work, field))


def in_row_span(rows: list[list], vec: list, field) -> bool:
    work = [list(r) for r in rows]
    r0 = len(echelon(work, field)) if work else 0
    work2 = [list(r) for r in rows] + [list(vec)]
    r1 = len(echelon(work2, field)) if work2 else 0
    return r1 == r0


def kernel_basis(rows: list[list], field, ncols: int):
    """Basis of the right kernel {v : M v = 0} of the matrix with given rows."""
    work = [list(r) for r in rows]
    if not work:
        # whole space
        basis = []
        for j in range(ncols):
            v = [field.zero] * ncols
            v[j] = field.one
            basis.append(v)
        return basis
    pivots = echelon(work, field)
    pivot_set = set(pivots)
    free_cols = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free_cols:
        v = [field.zero] * ncols
        v[j] = field.one
        for r, pc in enumerate(pivots):
            # row r: x_pc + sum over free cols of coeff * x_free = 0
            v[pc] = field.neg(work[r][j])
        basis.append(v)
    return basis
