"""Linear algebra over the prime field GF(p), on numpy integer arrays.

Every routine returns canonical representatives in ``[0, p)``.  The batched
rank is the workhorse of all exhaustive sweeps: a codeword, a Moore matrix or
an evaluation tuple is turned into an F_p-matrix and only its rank is needed.
"""

from __future__ import annotations

import numpy as np


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("zero has no inverse mod %d" % p)
    return pow(a, p - 2, p)


def _inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        table[a] = pow(a, p - 2, p)
    return table


def rref_mod_p(mat, p: int):
    """Reduced row echelon form of ``mat`` over GF(p).

    Returns ``(R, pivots)`` with ``R`` a new int64 array.
    """
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv_mod(int(a[r, c]), p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod_p(mat, p: int) -> int:
    a = np.asarray(mat)
    if a.size == 0:
        return 0
    return len(rref_mod_p(a, p)[1])


def nullspace_mod_p(mat, p: int) -> np.ndarray:
    """Basis of the right null space ``{v : mat @ v = 0}``, one vector per row."""
    a = np.array(mat, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref_mod_p(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, fc in enumerate(free):
        basis[t, fc] = 1
        for row, pc in enumerate(pivots):
            basis[t, pc] = (-r[row, fc]) % p
    return basis


def inv_matrix_mod_p(mat, p: int) -> np.ndarray:
    a = np.array(mat, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    r, pivots = rref_mod_p(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return r[:, n:]


def matmul_mod_p(a, b, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def matpow_mod_p(mat, e: int, p: int) -> np.ndarray:
    a = np.array(mat, dtype=np.int64) % p
    result = np.eye(a.shape[0], dtype=np.int64)
    while e > 0:
        if e & 1:
            result = (result @ a) % p
        a = (a @ a) % p
        e >>= 1
    return result


def batch_rank_mod_p(mats, p: int) -> np.ndarray:
    """Ranks of a stack of matrices of shape ``(B, R, C)`` over GF(p).

    Gauss-Jordan elimination without row swaps: for every column each batch
    member picks its first unused row with a nonzero entry as pivot.
    """
    # int16 keeps every product below 2^15 for small p and is markedly faster
    dt = np.int16 if p <= 181 else np.int64
    a = np.array(mats, dtype=np.int64) % p
    if a.ndim != 3:
        raise ValueError("expected a (B, R, C) stack")
    b, rows, cols = a.shape
    rank = np.zeros(b, dtype=np.int64)
    if b == 0 or rows == 0 or cols == 0:
        return rank
    a = a.astype(dt)
    inv = _inverse_table(p).astype(dt)
    used = np.zeros((b, rows), dtype=bool)
    idx = np.arange(b)
    for c in range(cols):
        cand = (a[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        prow = a[idx, piv, :]
        scale = inv[prow[:, c]] * has
        prow = (prow * scale[:, None]) % p
        factors = a[:, :, c].copy()
        factors[idx, piv] = 0
        factors *= has[:, None]
        a -= factors[:, :, None] * prow[:, None, :]
        a %= p
        sel = idx[has]
        a[sel, piv[has], :] = prow[has]
        used[sel, piv[has]] = True
        rank += has
    return rank
