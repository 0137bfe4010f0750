"""Exact Gaussian elimination over the rationals.

Pivoting rule everywhere: first nonzero entry in column order, scanning rows
top-down.  Deterministic, so every derived quantity (ranks, hyperplanes,
nullspaces) is bit-reproducible.
"""
from __future__ import annotations

from .rationals import Rat, ZERO


def echelon(rows):
    """Reduce `rows` (list of lists, modified in place) to row-echelon form.

    Returns the list of pivot column indices.
    """
    if not rows:
        return []
    n_cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f == 0:
                continue
            ratio = f / piv
            row_i, row_r = rows[i], rows[r]
            for j in range(c, n_cols):
                row_i[j] -= row_r[j] * ratio
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def matrix_rank(rows) -> int:
    return len(echelon([list(r) for r in rows]))


def nullspace(rows):
    """Basis of {x : rows @ x = 0}, one vector per free column, in column order."""
    if not rows:
        return []
    n_cols = len(rows[0])
    work = [list(r) for r in rows]
    pivots = echelon(work)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        x = [ZERO] * n_cols
        x[fc] = Rat(1)
        # back-substitute pivot variables
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = ZERO
            row = work[r]
            for c in range(pc + 1, n_cols):
                if x[c] != 0 and row[c] != 0:
                    s += row[c] * x[c]
            x[pc] = -s / row[pc]
        basis.append(tuple(x))
    return basis


def solve_square(a_rows, rhs):
    """Solve A x = b for square nonsingular A; raises on singular input."""
    n = len(a_rows)
    work = [list(r) + [rhs[i]] for i, r in enumerate(a_rows)]
    pivots = echelon(work)
    if len(pivots) != n or any(p >= n for p in pivots):
        raise ValueError("singular system")
    x = [ZERO] * n
    for r in range(n - 1, -1, -1):
        pc = pivots[r]
        s = work[r][n]
        row = work[r]
        for c in range(pc + 1, n):
            s -= row[c] * x[c]
        x[pc] = s / row[pc]
    return x


def mat_vec(rows, v):
    return tuple(sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in rows)


def mat_mul(a_rows, b_rows):
    n, k = len(a_rows), len(b_rows[0])
    m = len(b_rows)
    return tuple(
        tuple(sum((a_rows[i][t] * b_rows[t][j] for t in range(m)), ZERO) for j in range(k))
        for i in range(n)
    )


def identity(n):
    return tuple(tuple(Rat(1) if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(rows):
    return tuple(tuple(row[j] for row in rows) for j in range(len(rows[0])))
