"""Dense linear algebra over an arbitrary FieldCtx with scalar (int) entries.

Only meant for small systems: bases of codes, Moore matrices, membership tests.
"""

from __future__ import annotations

from .gf import FieldCtx


def rref(ctx: FieldCtx, rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ctx.inv(a[r][c])
        a[r] = [ctx.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r] + a[r:], pivots


def rank(ctx: FieldCtx, rows) -> int:
    return len(rref(ctx, rows)[1])


def nullspace(ctx: FieldCtx, rows, ncols: int | None = None):
    """Basis of {v : A v = 0}; one vector per entry."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    r, pivots = rref(ctx, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in enumerate(pivots):
            v[pc] = ctx.neg(r[row][fc])
        basis.append(v)
    return basis


def solve_left(ctx: FieldCtx, rows, target):
    """Coefficients c with sum c_i rows[i] = target, or None."""
    k = len(rows)
    if k == 0:
        return None if any(target) else []
    # columns of the augmented system are the coordinates
    ncols = len(target)
    system = [[rows[i][j] for i in range(k)] + [target[j]] for j in range(ncols)]
    r, pivots = rref(ctx, system)
    if k in pivots:
        return None
    sol = [0] * k
    for row, pc in enumerate(pivots):
        sol[pc] = r[row][k]
    return sol


def in_span(ctx: FieldCtx, rows, v) -> bool:
    return solve_left(ctx, rows, v) is not None


def det(ctx: FieldCtx, mat) -> int:
    a = [list(r) for r in mat]
    n = len(a)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = ctx.neg(result)
        result = ctx.mul(result, a[c][c])
        inv = ctx.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c]:
                f = ctx.mul(a[i][c], inv)
                a[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(a[i], a[c])]
    return result
