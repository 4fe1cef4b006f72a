"""Exact linear algebra over the rationals.

Everything reduces to a deterministic reduced row echelon form: columns are
scanned left to right and the first row with a nonzero entry becomes the
pivot.  No magnitude-based pivoting, so echelon bases (and hence every
representative choice downstream) are reproducible across runs and platforms.

Matrices are plain lists of lists of ``Fraction``.  A matrix may have zero
rows; ``ncols`` is therefore passed explicitly where it cannot be inferred.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ZERO, ONE, as_scalar

Row = list
Matrix = list


def copy_matrix(rows):
    return [list(map(as_scalar, row)) for row in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)`` with zero rows dropped.
    ``reduced_rows`` is a canonical basis of the row space.
    """
    work = copy_matrix(rows)
    if ncols is None:
        ncols = len(work[0]) if work else 0
    for row in work:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        src = None
        for r in range(pivot_row, len(work)):
            if work[r][col] != 0:
                src = r
                break
        if src is None:
            continue
        work[pivot_row], work[src] = work[src], work[pivot_row]
        inv = ONE / work[pivot_row][col]
        if inv != 1:
            work[pivot_row] = [x * inv for x in work[pivot_row]]
        prow = work[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], prow)]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    return work[: len(pivots)], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[0])


def nullspace(rows, ncols):
    """Deterministic kernel basis of the linear map given by ``rows``.

    One basis vector per free column, in increasing column order; the free
    coordinate is set to 1 and pivot coordinates are back-filled from rref.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][free]
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols=None):
    """One particular solution of ``rows @ x = rhs`` or None if inconsistent.

    Deterministic: free variables are set to zero, so the result is the
    echelon solution with minimal support under the column order.
    """
    work = copy_matrix(rows)
    if ncols is None:
        ncols = len(work[0]) if work else 0
    rhs = [as_scalar(v) for v in rhs]
    if len(rhs) != len(work):
        raise ValueError("rhs length does not match row count")
    augmented = [row + [val] for row, val in zip(work, rhs)]
    if not augmented:
        return [ZERO] * ncols
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [ZERO] * ncols
    for r, p in enumerate(pivots):
        solution[p] = reduced[r][ncols]
    return solution


def det(rows):
    """Determinant by exact elimination (square matrices only)."""
    work = copy_matrix(rows)
    n = len(work)
    for row in work:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
    sign = ONE
    result = ONE
    for col in range(n):
        src = None
        for r in range(col, n):
            if work[r][col] != 0:
                src = r
                break
        if src is None:
            return ZERO
        if src != col:
            work[col], work[src] = work[src], work[col]
            sign = -sign
        pivot = work[col][col]
        result *= pivot
        for r in range(col + 1, n):
            if work[r][col] != 0:
                f = work[r][col] / pivot
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return sign * result


def invert(rows):
    """Exact inverse; raises ValueError on singular input."""
    n = len(rows)
    work = [list(map(as_scalar, row)) + [ONE if i == j else ZERO for j in range(n)]
            for i, row in enumerate(rows)]
    reduced, pivots = rref(work, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


def in_row_space(basis_rref, pivots, vector):
    """Membership test against an rref basis (no copy, no extra rref)."""
    vec = [as_scalar(v) for v in vector]
    for row, p in zip(basis_rref, pivots):
        f = vec[p]
        if f != 0:
            vec = [a - f * b for a, b in zip(vec, row)]
    return all(v == 0 for v in vec)


def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    return [
        [sum((row[k] * b[k][j] for k in range(inner)), ZERO) for j in range(len(b[0]))]
        for row in a
    ]


def mat_vec(rows, vec):
    return [sum((row[k] * vec[k] for k in range(len(vec))), ZERO) for row in rows]
