"""Linearized polynomials sum a_i x^(q^i) of q-degree < N over GF(q^N).

Composition is taken modulo x^(q^N) - x, so the algebra is the twisted group
ring with a * x^(q^i) composed with b * x^(q^j) equal to a b^(q^i) x^(q^(i+j)).
"""

from __future__ import annotations

import random

import numpy as np

from . import fp, linalg
from .errors import InvalidInput
from .gf import TowerLevel, embed, vembed


class LinPoly:
    __slots__ = ("level", "coeffs", "_fpmat")

    def __init__(self, level: TowerLevel, coeffs):
        coeffs = tuple(level.ctx.check(c) for c in coeffs)
        if len(coeffs) != level.N:
            raise InvalidInput(f"a linearized polynomial over {level!r} needs exactly {level.N} coefficients")
        self.level = level
        self.coeffs = coeffs
        self._fpmat = None

    # constructors
    @classmethod
    def zero(cls, level: TowerLevel) -> "LinPoly":
        return cls(level, [0] * level.N)

    @classmethod
    def monomial(cls, level: TowerLevel, i: int, c: int = 1) -> "LinPoly":
        coeffs = [0] * level.N
        coeffs[i % level.N] = c
        return cls(level, coeffs)

    @classmethod
    def x(cls, level: TowerLevel) -> "LinPoly":
        return cls.monomial(level, 0)

    @classmethod
    def from_terms(cls, level: TowerLevel, terms) -> "LinPoly":
        coeffs = [0] * level.N
        for i, c in terms:
            i = int(i)
            if not 0 <= i < level.N:
                raise InvalidInput(f"exponent index {i} outside [0, {level.N})")
            coeffs[i] = level.ctx.add(coeffs[i], level.ctx.check(c))
        return cls(level, coeffs)

    @classmethod
    def from_json(cls, level: TowerLevel, data) -> "LinPoly":
        if isinstance(data, dict) and set(data) == {"coeffs"}:
            return cls(level, [int(c) for c in data["coeffs"]])
        if isinstance(data, dict) and set(data) == {"terms"}:
            return cls.from_terms(level, [(int(i), int(c)) for i, c in data["terms"]])
        raise InvalidInput("a linearized polynomial is {'coeffs': [...]} or {'terms': [[i, c], ...]}")

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    # basic structure
    @property
    def n(self) -> int:
        return self.level.N

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def qdeg_bounds(self) -> tuple[int, int]:
        """(mindeg_q, deg_q); undefined for the zero polynomial."""
        idx = [i for i, c in enumerate(self.coeffs) if c]
        if not idx:
            raise InvalidInput("q-degree of the zero polynomial is undefined")
        return idx[0], idx[-1]

    @property
    def qdeg(self) -> int:
        return self.qdeg_bounds()[1]

    @property
    def mindeg(self) -> int:
        return self.qdeg_bounds()[0]

    @property
    def is_separable(self) -> bool:
        return self.coeffs[0] != 0

    @property
    def is_monomial(self) -> bool:
        return len(self.terms()) == 1

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coeffs[self.qdeg] == 1

    def _same(self, other: "LinPoly") -> None:
        if not isinstance(other, LinPoly) or other.level is not self.level:
            raise InvalidInput("linearized polynomials live over different fields")

    def __eq__(self, other):
        return isinstance(other, LinPoly) and other.level is self.level and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.level.N, self.level.q, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in self.terms():
            mono = "x" if i == 0 else f"x^(q^{i})"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    # vector space structure
    def __add__(self, other: "LinPoly") -> "LinPoly":
        self._same(other)
        ctx = self.level.ctx
        return LinPoly(self.level, [ctx.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        self._same(other)
        ctx = self.level.ctx
        return LinPoly(self.level, [ctx.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "LinPoly":
        return LinPoly(self.level, [self.level.ctx.neg(a) for a in self.coeffs])

    def scale(self, c: int) -> "LinPoly":
        """The polynomial c * f (left multiplication by a constant)."""
        ctx = self.level.ctx
        c = ctx.check(c)
        return LinPoly(self.level, [ctx.mul(c, a) for a in self.coeffs])

    # the map
    def evaluate(self, x: int) -> int:
        lv = self.level
        x = lv.ctx.check(x)
        acc = 0
        for i, a in enumerate(self.coeffs):
            if a:
                acc = lv.ctx.add(acc, lv.ctx.mul(a, lv.frob(x, i)))
        return acc

    __call__ = evaluate

    def veval(self, arr) -> np.ndarray:
        """Evaluate on an array of elements (uses the F_p-matrix, no tables needed)."""
        return self.level.ctx.vlinear(self.fp_matrix(), arr)

    def compose(self, g: "LinPoly") -> "LinPoly":
        """self o g, reduced modulo x^(q^N) - x."""
        self._same(g)
        lv, N = self.level, self.level.N
        ctx = lv.ctx
        out = [0] * N
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(g.coeffs):
                if b:
                    l = (i + j) % N
                    out[l] = ctx.add(out[l], ctx.mul(a, lv.frob(b, i)))
        return LinPoly(lv, out)

    def apply_rho(self, r: int) -> "LinPoly":
        """Apply the field automorphism a -> a^(p^r) to every coefficient."""
        ctx = self.level.ctx
        return LinPoly(self.level, [ctx.frob_p(a, r) for a in self.coeffs])

    def fp_matrix(self) -> np.ndarray:
        """Matrix of y -> f(y) over GF(p) in the power basis of the level field."""
        if self._fpmat is None:
            lv = self.level
            acc = np.zeros((lv.E, lv.E), dtype=np.int64)
            for i, a in enumerate(self.coeffs):
                if a:
                    acc += lv.ctx.mul_matrix(a) @ lv.frob_matrix(i)
            self._fpmat = acc % lv.p
        return self._fpmat

    def as_matrix(self) -> list[list[int]]:
        """N x N matrix over GF(q) of y -> f(y) in the basis 1, G, ..., G^(N-1).

        Entries are GF(q) encodings; column j holds the coordinates of f(G^j).
        """
        lv = self.level
        cols = [lv.coords_q(self.evaluate(lv.from_coords_q([1 if t == j else 0 for t in range(lv.N)])))
                for j in range(lv.N)]
        return [[cols[j][i] for j in range(lv.N)] for i in range(lv.N)]

    def rank(self) -> int:
        return linalg.rank(self.level.base, self.as_matrix())

    def kernel_dim(self) -> int:
        """dim over F_q of the kernel, by elimination over GF(q)."""
        return self.level.N - self.rank()

    def kernel_dim_fp(self) -> int:
        """Same quantity through the F_p-matrix: (E - rank_p) / h."""
        lv = self.level
        return (lv.E - fp.rank_mod_p(self.fp_matrix(), lv.p)) // lv.h

    def kernel(self) -> list[int]:
        """An F_p-basis of the kernel, as field elements."""
        lv = self.level
        basis = fp.nullspace_mod_p(self.fp_matrix(), lv.p)
        return [int(v) for v in lv.ctx.encode(basis)] if len(basis) else []

    def is_invertible(self) -> bool:
        return self.kernel_dim_fp() == 0

    def lift(self, target: TowerLevel) -> "LinPoly":
        """The same polynomial over GF(q^(N*m)), zero-padded to length N*m."""
        if target.N % self.level.N or (target.p, target.h) != (self.level.p, self.level.h):
            raise InvalidInput(f"{target!r} does not extend {self.level!r}")
        coeffs = [embed(a, self.level, target) if a else 0 for a in self.coeffs]
        return LinPoly(target, coeffs + [0] * (target.N - self.level.N))


def vlift(arr, src: TowerLevel, dst: TowerLevel):
    return vembed(arr, src, dst)


def compose(f: LinPoly, g: LinPoly) -> LinPoly:
    return f.compose(g)


def random_poly(level: TowerLevel, rng: random.Random) -> LinPoly:
    return LinPoly(level, [rng.randrange(level.ctx.order) for _ in range(level.N)])


def random_invertible(level: TowerLevel, seed: int) -> LinPoly:
    """Deterministic (given the seed) invertible linearized polynomial."""
    rng = random.Random(seed)
    while True:
        f = random_poly(level, rng)
        if f.is_invertible():
            return f
