"""Exact dense linear algebra over F_q (and F_p-rank of F_q vectors).

Gaussian elimination on lists of FqElem rows.  Desk-scale dimensions
(at most a few hundred) make density harmless.
"""

from __future__ import annotations

from .field import FieldCtx, FqElem


def rref(rows, ctx: FieldCtx):
    """Reduced row-echelon form.  Returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    pr = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(pr, len(rows)) if not rows[i][col].is_zero()), None
        )
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = rows[pr][col].inv()
        rows[pr] = [c * inv for c in rows[pr]]
        for i in range(len(rows)):
            if i != pr and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(col)
        pr += 1
        if pr == len(rows):
            break
    return rows, pivots


def rank(rows, ctx: FieldCtx) -> int:
    """Rank over F_q."""
    return len(rref(rows, ctx)[1])


def rank_fp(rows, ctx: FieldCtx) -> int:
    """Dimension over F_p of the F_p-span of F_q vectors.

    Each F_q coordinate expands to its r coefficients over the prime
    field, turning F_p-combinations into ordinary F_p linear algebra.
    """
    if not rows:
        return 0
    p_ctx = ctx if ctx.r == 1 else FieldCtx(ctx.p, 1)
    expanded = [
        [p_ctx.from_int(c) for e in row for c in e.coeffs] for row in rows
    ]
    return rank(expanded, p_ctx)


def kernel(rows, ncols: int, ctx: FieldCtx):
    """Basis of the right kernel of the matrix as length-ncols vectors."""
    red, pivots = rref(rows, ctx)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ctx.zero()] * ncols
        v[free] = ctx.one()
        for row_idx, col in enumerate(pivots):
            v[col] = -red[row_idx][free]
        basis.append(v)
    return basis


def solve(columns, target, ctx: FieldCtx):
    """Solve sum_j z_j * columns[j] = target over F_q.

    Returns a coefficient list (free variables set to zero) or None when
    the system is inconsistent.
    """
    k = len(columns)
    nrows = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(nrows)]
    red, pivots = rref(aug, ctx)
    if k in pivots:
        return None
    z = [ctx.zero()] * k
    for row_idx, col in enumerate(pivots):
        z[col] = red[row_idx][k]
    return z
