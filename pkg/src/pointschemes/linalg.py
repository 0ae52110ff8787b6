"""Dense exact linear algebra over a `Field`.

Vectors are tuples of raw scalar values; matrices are lists of such
rows.  Everything is small and desk-scale, so the routines favor a
canonical output (reduced row echelon form with pivots sorted) over
speed: two subspaces are equal iff their `rref` bases are equal as
lists.
"""

from __future__ import annotations

__all__ = ["rref", "rank", "nullspace", "in_span", "kron", "matmul"]


def rref(field, rows):
    """Reduced row echelon basis of the span of ``rows``.

    Returns a list of tuples: pivot columns strictly increasing, pivot
    entries 1, pivot columns zero elsewhere.  Zero rows are dropped, so
    the result is a canonical basis of the row span.
    """
    mat = [list(r) for r in rows if any(c != 0 for c in r)]
    if not mat:
        return []
    ncols = len(mat[0])
    col = 0
    r = 0
    while r < len(mat) and col < ncols:
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = field.inv(mat[r][col])
        mat[r] = [field.mul(inv, c) for c in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        r += 1
        col += 1
    return [tuple(row) for row in mat[:r]]


def rank(field, rows) -> int:
    return len(rref(field, rows))


def nullspace(field, rows, ncols: int):
    """Canonical (rref'd) basis of the right kernel {x : A x = 0}."""
    reduced = rref(field, rows)
    pivot_cols = []
    for row in reduced:
        for j, c in enumerate(row):
            if c != 0:
                pivot_cols.append(j)
                break
    free_cols = [j for j in range(ncols) if j not in pivot_cols]
    basis = []
    zero = field.zero
    for j in free_cols:
        vec = [zero] * ncols
        vec[j] = field.one
        for row, pc in zip(reduced, pivot_cols):
            vec[pc] = field.neg(row[j])
        basis.append(tuple(vec))
    return rref(field, basis)


def in_span(field, rows, vec) -> bool:
    """True iff ``vec`` lies in the row span of ``rows``."""
    base = rref(field, rows)
    return rref(field, base + [tuple(vec)]) == base


def kron(field, a, b):
    """Kronecker product of two matrices (lists of rows)."""
    if not a or not b:
        return []
    out = []
    for ra in a:
        for rb in b:
            out.append(tuple(field.mul(x, y) for x in ra for y in rb))
    return out


def matmul(field, a, b):
    """Product of two matrices given as lists of rows."""
    if not a or not b:
        return []
    n = len(b)
    m = len(b[0])
    out = []
    for row in a:
        acc = [field.zero] * m
        for k in range(n):
            x = row[k]
            if x == 0:
                continue
            brow = b[k]
            for j in range(m):
                acc[j] = field.add(acc[j], field.mul(x, brow[j]))
        out.append(tuple(acc))
    return out
