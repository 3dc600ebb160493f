"""Gaussian elimination over GF(q) on integer-code matrices."""

from __future__ import annotations

import numpy as np

from .gf import FieldSpec


def row_reduce(field: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` over ``field``.

    Pivots are taken column by column from the left, each time using the
    first row at or below the current pivot row with a nonzero entry.

    Returns ``(R, pivot_cols)``.
    """
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if len(nz) == 0:
            continue
        r = row + int(nz[0])
        if r != row:
            R[[row, r]] = R[[r, row]]
        R[row] = mul[inv[R[row, col]], R[row]]
        for other in np.flatnonzero(R[:, col]):
            if other != row:
                factor = neg[R[other, col]]
                R[other] = add[R[other], mul[factor, R[row]]]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(field: FieldSpec, M) -> int:
    return len(row_reduce(field, M)[1])


def null_space(field: FieldSpec, M) -> np.ndarray:
    """Row-reduced basis (as rows) of ``{x : M x = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = row_reduce(field, M)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    neg = field.neg_table
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = neg[R[r, fc]]
    if len(basis) == 0:
        return basis
    return row_reduce(field, basis)[0]
