"""Batched exhaustive enumeration.

Everything is reduced to ranks of F_p-matrices, computed a chunk at a time
with :func:`fp.batch_rank_mod_p`.  Chunks are visited in lexicographic order
and the first hit inside a chunk is taken, so reported witnesses are the
lexicographically least ones regardless of chunking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import fp
from .gf import TowerLevel

CHUNK_ENTRIES = 1 << 22


def _chunk_size(per_item: int) -> int:
    return max(1, CHUNK_ENTRIES // max(1, per_item))


def projective_count(S: int, k: int) -> int:
    return (S**k - 1) // (S - 1)


def normalized_tuples(k: int, S: int, chunk: int):
    """Yield (B, k) arrays of all tuples over [0, S) whose first nonzero entry is 1.

    The order is lexicographic on the integer encodings.
    """
    for pos in range(k - 1, -1, -1):
        free = k - 1 - pos
        total = S**free
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            out = np.zeros((idx.size, k), dtype=np.int64)
            out[:, pos] = 1
            rest = idx.copy()
            for col in range(k - 1, pos, -1):
                out[:, col] = rest % S
                rest //= S
            yield out


def all_tuples(k: int, S: int, chunk: int, start_value: int = 0):
    """Yield all tuples over [start_value, S) in lexicographic order."""
    width = S - start_value
    total = width**k
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        out = np.zeros((idx.size, k), dtype=np.int64)
        rest = idx.copy()
        for col in range(k - 1, -1, -1):
            out[:, col] = rest % width + start_value
            rest //= width
        yield out


# -- codeword sweeps -------------------------------------------------------------------

class CodewordTensor:
    """Maps coefficient tuples (b_1..b_k) to F_p-matrices of sum b_i f_i.

    ``scalars`` is "qn" (b_i in the level field) or "q" (b_i in GF(q)).
    """

    def __init__(self, basis, scalars: str = "qn"):
        lv: TowerLevel = basis[0].level
        self.level = lv
        self.scalars = scalars
        self.k = len(basis)
        if scalars == "qn":
            self.S = lv.ctx.order
            self.sdecode = lv.ctx.decode
            betas = lv.ctx._xpow
        else:
            self.S = lv.q
            self.sdecode = lv.base.decode
            betas = lv._gamma_mats
        F = np.stack([f.fp_matrix() for f in basis])
        self.K = np.einsum("dxy,iyz->idxz", betas, F) % lv.p

    def matrices(self, coeffs: np.ndarray) -> np.ndarray:
        dig = self.sdecode(coeffs)
        return np.einsum("bid,idxz->bxz", dig, self.K) % self.level.p

    def kernel_dims(self, coeffs: np.ndarray) -> np.ndarray:
        lv = self.level
        ranks = fp.batch_rank_mod_p(self.matrices(coeffs), lv.p)
        return (lv.E - ranks) // lv.h


@dataclass
class SweepHit:
    coeffs: tuple
    kernel_dim: int
    visited: int


def first_violation(basis, threshold: int, scalars: str = "qn"):
    """Lexicographically first normalized codeword with kernel_dim >= threshold."""
    tensor = CodewordTensor(basis, scalars)
    E = tensor.level.E
    visited = 0
    for chunk in normalized_tuples(tensor.k, tensor.S, _chunk_size(E * E * 4)):
        kd = tensor.kernel_dims(chunk)
        hits = np.nonzero(kd >= threshold)[0]
        if hits.size:
            i = int(hits[0])
            return SweepHit(tuple(int(v) for v in chunk[i]), int(kd[i]), visited + i + 1)
        visited += len(chunk)
    return None


def kernel_histogram(basis, scalars: str = "qn") -> dict[int, int]:
    """Number of normalized codewords per kernel dimension."""
    tensor = CodewordTensor(basis, scalars)
    E = tensor.level.E
    hist: dict[int, int] = {}
    for chunk in normalized_tuples(tensor.k, tensor.S, _chunk_size(E * E * 4)):
        vals, counts = np.unique(tensor.kernel_dims(chunk), return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            hist[v] = hist.get(v, 0) + c
    return hist


# -- evaluation-point sweeps (Moore matrices) ------------------------------------------------

class MooreTensor:
    """Maps point tuples (a_1..a_j) to the F_p-matrix of b -> (f_b(a_r))_r.

    The tuple admits a codeword of the span vanishing at all a_r iff the
    matrix, of shape (j*E, k*E), has rank < k*E.
    """

    def __init__(self, basis):
        lv: TowerLevel = basis[0].level
        self.level = lv
        self.k = len(basis)
        F = np.stack([f.fp_matrix() for f in basis])
        # Q[i, d] = (multiplication by X^d) o f_i
        self.Q = np.einsum("dxy,iyz->idxz", lv.ctx._xpow, F) % lv.p

    def matrices_from_digits(self, pdig: np.ndarray) -> np.ndarray:
        lv = self.level
        b, j = pdig.shape[0], pdig.shape[1]
        m = np.einsum("idac,brc->braid", self.Q, pdig) % lv.p
        return m.reshape(b, j * lv.E, self.k * lv.E)

    def singular(self, points: np.ndarray) -> np.ndarray:
        lv = self.level
        pdig = lv.ctx.decode(points)
        ranks = fp.batch_rank_mod_p(self.matrices_from_digits(pdig), lv.p)
        return ranks < self.k * lv.E

    def singular_digits(self, pdig: np.ndarray) -> np.ndarray:
        lv = self.level
        ranks = fp.batch_rank_mod_p(self.matrices_from_digits(pdig), lv.p)
        return ranks < self.k * lv.E


def subspace_bases(level: TowerLevel, j: int, chunk: int):
    """Yield (B, j) arrays of level elements: bases of every j-dim F_q-subspace.

    Each subspace appears once, through the rows of its reduced echelon
    generator matrix over GF(q) in the basis 1, G, ..., G^(N-1).
    """
    N, q, h, p = level.N, level.q, level.h, level.p
    base = level.base
    # digits of c * G^col for c in GF(q), col < N
    table = np.zeros((q, N, level.E), dtype=np.int64)
    for c in range(q):
        cd = np.array(base.digits(c), dtype=np.int64)
        for col in range(N):
            table[c, col] = level.qbasis[:, col * h:(col + 1) * h] @ cd % p
    for pivots in combinations(range(N), j):
        free_pos = [(r, c) for r in range(j) for c in range(pivots[r] + 1, N) if c not in pivots]
        total = q ** len(free_pos)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            mat = np.zeros((idx.size, j, N), dtype=np.int64)
            for r, c in enumerate(pivots):
                mat[:, r, c] = 1
            rest = idx.copy()
            for (r, c) in reversed(free_pos):
                mat[:, r, c] = rest % q
                rest //= q
            dig = table[mat, np.arange(N)[None, None, :]].sum(axis=2) % p
            yield level.ctx.encode(dig)


def first_singular_subspace(basis, j: int):
    """First j-dim F_q-subspace on which some nonzero codeword vanishes."""
    tensor = MooreTensor(basis)
    lv = tensor.level
    visited = 0
    for chunk in subspace_bases(lv, j, _chunk_size(j * tensor.k * lv.E * lv.E * 2)):
        sing = tensor.singular(chunk)
        hits = np.nonzero(sing)[0]
        if hits.size:
            i = int(hits[0])
            return tuple(int(v) for v in chunk[i]), visited + i + 1
        visited += len(chunk)
    return None, visited
