"""Prime-power fields and the tower GF(p) < GF(q) < GF(q^n) < GF(q^(nm)).

A field GF(p^e) is ``GF(p)[X]/(P)`` with ``P`` the monic irreducible of degree
``e`` whose coefficient vector ``c_0..c_(e-1)``, read as the base-p integer
``sum(c_i p^i)``, is smallest.  This is deterministic but *not* Conway
compatible.  Elements are plain ints (the same base-p encoding).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import fp
from .errors import InternalError, InvalidInput

TABLE_LIMIT = 2**20
MAX_FIELD_SIZE = 2**32


# -- integers -----------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**h``; raises InvalidInput if q is not a prime power."""
    if q < 2:
        raise InvalidInput(f"{q} is not a prime power")
    facs = prime_factors(q)
    if len(facs) != 1:
        raise InvalidInput(f"{q} is not a prime power")
    p = facs[0]
    h = 0
    while q > 1:
        q //= p
        h += 1
    return p, h


# -- GF(p)[x], lists of coefficients low -> high --------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    lead_inv = fp.inv_mod(m[-1], p)
    while len(a) - 1 >= dm:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while e > 0:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = fp.inv_mod(a[-1], p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Ben-Or test: gcd(x^(p^i) - x, f) = 1 for all i <= deg(f)/2."""
    f = _trim([c % p for c in f])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    xp = [0, 1]
    for _ in range(d // 2):
        xp = poly_powmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(poly_gcd(f, _trim(diff), p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def minimal_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e with least base-p encoding, as c_0..c_e."""
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise InternalError(f"no irreducible polynomial of degree {e} over GF({p})")


# -- a single field -------------------------------------------------------------

class FieldCtx:
    """GF(p^e) with int-encoded elements.

    Log/antilog tables are built when the field has at most TABLE_LIMIT
    elements; larger fields fall back to polynomial arithmetic and to the
    F_p-linear matrices, which always exist.
    """

    def __init__(self, p: int, e: int, modulus=None, table_limit: int = TABLE_LIMIT):
        if not is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        if e < 1:
            raise InvalidInput("extension degree must be positive")
        if modulus is None:
            modulus = minimal_irreducible(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise InvalidInput("defining polynomial must be monic of degree %d" % e)
        if not is_irreducible(list(modulus), p):
            raise InvalidInput(f"{list(modulus)} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = modulus
        self._pw = np.array([p**i for i in range(e)], dtype=np.int64)
        self.generator = self.from_digits([0, 1] + [0] * (e - 2)) if e > 1 else (-modulus[0]) % p

        comp = np.zeros((e, e), dtype=np.int64)
        for j in range(e - 1):
            comp[j + 1, j] = 1
        for i in range(e):
            comp[i, e - 1] = (-modulus[i]) % p
        self._xpow = [np.eye(e, dtype=np.int64)]
        for _ in range(e - 1):
            self._xpow.append((comp @ self._xpow[-1]) % p)
        self._xpow = np.stack(self._xpow)

        self.frob_p_matrix = np.zeros((e, e), dtype=np.int64)
        for j in range(e):
            img = poly_powmod([0] * j + [1], p, list(modulus), p)
            self.frob_p_matrix[:, j] = self._pad(img)

        self.primitive = self._find_primitive()
        self._exp = self._log = None
        if self.order <= table_limit:
            self._build_tables()

    # encodings
    def _pad(self, coeffs) -> np.ndarray:
        v = np.zeros(self.e, dtype=np.int64)
        v[: len(coeffs)] = coeffs
        return v

    def digits(self, a: int) -> list[int]:
        a = int(a)
        if not 0 <= a < self.order:
            raise InvalidInput(f"{a} is not an element encoding of GF({self.p}^{self.e})")
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + int(d) % self.p
        return v

    def decode(self, arr) -> np.ndarray:
        """Vectorised digits: shape (..., e)."""
        a = np.array(arr, dtype=np.int64)
        out = np.empty(a.shape + (self.e,), dtype=np.int64)
        for i in range(self.e):
            out[..., i] = a % self.p
            a = a // self.p
        return out

    def encode(self, dig) -> np.ndarray:
        return (np.asarray(dig, dtype=np.int64) % self.p) @ self._pw

    def check(self, a: int) -> int:
        if isinstance(a, FieldElem):
            if a.ctx is not self and (a.ctx.p, a.ctx.modulus) != (self.p, self.modulus):
                raise InvalidInput("element belongs to a different field")
            return a.value
        a = int(a)
        if not 0 <= a < self.order:
            raise InvalidInput(f"{a} is not an element encoding of GF({self.p}^{self.e})")
        return a

    # scalar arithmetic
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scal(self, c: int, a: int) -> int:
        """Multiply by the prime-field integer c."""
        return self.from_digits([(c * x) % self.p for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.order - 1)]
        return self.from_digits(poly_mod(poly_mul(self.digits(a), self.digits(b), self.p), list(self.modulus), self.p))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        if self._log is not None:
            return self._exp_list[(self._log_list[a] * k) % (self.order - 1)]
        return self.from_digits(poly_powmod(self.digits(a), k, list(self.modulus), self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob_p(self, a: int, k: int = 1) -> int:
        """a^(p^k)."""
        k %= self.e
        if k == 0 or a == 0:
            return a
        if self._log is not None:
            return self._exp_list[(self._log_list[a] * pow(self.p, k, self.order - 1)) % (self.order - 1)]
        m = fp.matpow_mod_p(self.frob_p_matrix, k, self.p)
        return int(self.encode(m @ self.decode(a)))

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        if self._log is not None:
            return self._log_list[a]
        raise NotImplementedError("discrete logs need tables")

    # linear maps
    def mul_matrix(self, c: int) -> np.ndarray:
        """F_p-matrix of y -> c*y on digit column vectors."""
        d = np.array(self.digits(c), dtype=np.int64)
        return np.tensordot(d, self._xpow, axes=1) % self.p

    def frob_matrix(self, k: int) -> np.ndarray:
        return fp.matpow_mod_p(self.frob_p_matrix, k % self.e, self.p)

    # vector arithmetic
    @property
    def has_tables(self) -> bool:
        return self._log is not None

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.encode(self.decode(a) + self.decode(b))

    def vsub(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.encode(self.decode(a) - self.decode(b))

    def vmul(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self._log is None:
            flat = [self.mul(int(x), int(y)) for x, y in zip(a.ravel(), b.ravel())]
            return np.array(flat, dtype=np.int64).reshape(a.shape)
        out = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        if self._log is None:
            flat = [self.pow(int(x), k) for x in a.ravel()]
            return np.array(flat, dtype=np.int64).reshape(a.shape)
        out = self._exp[(self._log[a] * (k % (self.order - 1))) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def vlinear(self, mat, a) -> np.ndarray:
        """Apply an F_p-linear map given by its matrix to an array of elements."""
        dig = self.decode(a)
        return self.encode(dig @ np.asarray(mat, dtype=np.int64).T)

    # tables
    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        facs = prime_factors(n)
        for a in range(2, self.order):
            if all(self.pow_slow(a, n // r) != 1 for r in facs):
                return a
        raise InternalError("no primitive element found")

    def pow_slow(self, a: int, k: int) -> int:
        return self.from_digits(poly_powmod(self.digits(a), k, list(self.modulus), self.p))

    def _build_tables(self) -> None:
        n = self.order - 1
        dig = np.zeros((1, self.e), dtype=np.int64)
        dig[0, 0] = 1
        step = self.mul_matrix(self.primitive)
        while dig.shape[0] < n:
            dig = np.vstack([dig, (dig @ step.T) % self.p])
            step = (step @ step) % self.p
        dig = dig[:n]
        exp = self.encode(dig)
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if (log[1:] < 0).any() or log[0] != -1:
            raise InternalError("antilog table is not a bijection")
        self._exp = np.concatenate([exp, exp])
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()

    # sugar
    def __call__(self, value) -> "FieldElem":
        return FieldElem(self, self.check(value))

    @property
    def gen(self) -> "FieldElem":
        return FieldElem(self, self.generator)

    def elements(self):
        return range(self.order)

    def spec(self) -> dict:
        return {"p": self.p, "e": self.e, "defining_poly": list(self.modulus)}

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})"


@lru_cache(maxsize=None)
def field_ctx(p: int, e: int) -> FieldCtx:
    return FieldCtx(p, e)


class FieldElem:
    """An element bundled with its field; ints in arithmetic are wire encodings."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = int(value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise InvalidInput("mixed field contexts")
            return other.value
        return self.ctx.check(other)

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, k: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, k))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.value))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.ctx!r}({self.value})"


# -- tower levels ------------------------------------------------------------------

def _subfield_roots(small: FieldCtx, big: FieldCtx) -> list[int]:
    """All roots of small's defining polynomial inside big, ascending."""
    if big.e % small.e:
        raise InvalidInput(f"GF(p^{small.e}) is not a subfield of GF(p^{big.e})")
    if small.e == 1:
        return [(-small.modulus[0]) % small.p]
    w = big.pow(big.primitive, (big.order - 1) // (small.order - 1))
    roots = []
    cand = 1
    for _ in range(small.order - 1):
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, cand), c)
        if acc == 0:
            roots.append(cand)
        cand = big.mul(cand, w)
    if len(roots) != small.e:
        raise InternalError("wrong number of subfield roots")
    return sorted(roots)


def _embedding_matrix(small: FieldCtx, big: FieldCtx, root: int) -> np.ndarray:
    cols = []
    acc = 1
    for _ in range(small.e):
        cols.append(big.digits(acc))
        acc = big.mul(acc, root)
    return np.array(cols, dtype=np.int64).T


class TowerLevel:
    """GF(q^N) viewed as an extension of GF(q), q = p^h.

    ``ctx`` is GF(p^(hN)); ``base`` is GF(p^h).  ``gamma`` is the image of the
    base field's generator.  The GF(q)-basis of the level is 1, G, ..., G^(N-1)
    with G the generator of ``ctx``.
    """

    def __init__(self, p: int, h: int, N: int):
        self.p, self.h, self.N = p, h, N
        self.q = p**h
        self.ctx = field_ctx(p, h * N)
        self.base = field_ctx(p, h)
        self.E = h * N
        if N == 1:
            self.gamma = self.base.generator
            self.base_embed = np.eye(h, dtype=np.int64)
        else:
            self.gamma = _subfield_roots(self.base, self.ctx)[0]
            self.base_embed = _embedding_matrix(self.base, self.ctx, self.gamma)
        self.frobq = self.ctx.frob_matrix(h)
        self._frobq_pows = [np.eye(self.E, dtype=np.int64)]
        for _ in range(N - 1):
            self._frobq_pows.append((self.frobq @ self._frobq_pows[-1]) % p)
        # F_p-basis gamma^l * G^j, column index j*h + l
        cols = []
        G = self.ctx.generator if self.E > 1 else 1
        for j in range(N):
            gj = self.ctx.pow(G, j) if N > 1 else 1
            for l in range(h):
                cols.append(self.ctx.digits(self.ctx.mul(self.ctx.pow(self.gamma, l), gj)))
        self.qbasis = np.array(cols, dtype=np.int64).T
        self._qbasis_inv = fp.inv_matrix_mod_p(self.qbasis, p)
        self._gamma_mats = np.stack([self.ctx.mul_matrix(self.ctx.pow(self.gamma, l)) for l in range(h)])

    def __repr__(self) -> str:
        return f"GF({self.q}^{self.N})"

    # Frobenius over GF(q)
    def frob(self, x: int, i: int = 1) -> int:
        return self.ctx.frob_p(x, (self.h * i) % self.E)

    def frob_matrix(self, i: int) -> np.ndarray:
        return self._frobq_pows[i % self.N]

    def vfrob(self, arr, i: int) -> np.ndarray:
        return self.ctx.vlinear(self.frob_matrix(i), arr)

    # GF(q) inside the level
    def embed_base(self, c: int) -> int:
        c = self.base.check(c)
        return int(self.ctx.encode((self.base_embed @ np.array(self.base.digits(c))) % self.p))

    def in_base(self, x: int) -> bool:
        return self.frob(x, 1) == x

    def coords_q(self, x: int) -> list[int]:
        """GF(q)-coordinates of x in the basis 1, G, ..., G^(N-1) (base encodings)."""
        c = (self._qbasis_inv @ np.array(self.ctx.digits(x), dtype=np.int64)) % self.p
        return [self.base.from_digits(c[j * self.h:(j + 1) * self.h]) for j in range(self.N)]

    def from_coords_q(self, coords) -> int:
        dig = np.zeros(self.E, dtype=np.int64)
        for j, c in enumerate(coords):
            dig[j * self.h:(j + 1) * self.h] = self.base.digits(c)
        return int(self.ctx.encode((self.qbasis @ dig) % self.p))

    def to_base(self, x: int) -> int:
        coords = self.coords_q(x)
        if any(coords[1:]):
            raise InternalError(f"{x} does not lie in GF({self.q})")
        return coords[0]

    # trace, norm, F_q-rank
    def trace(self, x: int) -> int:
        x = self.ctx.check(x)
        acc = 0
        for i in range(self.N):
            acc = self.ctx.add(acc, self.frob(x, i))
        return self.to_base(acc)

    def norm(self, x: int) -> int:
        x = self.ctx.check(x)
        if x == 0:
            return 0
        acc = 1
        for i in range(self.N):
            acc = self.ctx.mul(acc, self.frob(x, i))
        return self.to_base(acc)

    def fq_span_matrix(self, elems) -> np.ndarray:
        """Rows: digits of gamma^l * a for every a in elems and l < h."""
        dig = self.ctx.decode(np.asarray(list(elems), dtype=np.int64))
        if dig.size == 0:
            return np.zeros((0, self.E), dtype=np.int64)
        rows = np.einsum("lab,kb->kla", self._gamma_mats, dig) % self.p
        return rows.reshape(-1, self.E)

    def fq_rank(self, elems) -> int:
        elems = [self.ctx.check(a) for a in elems]
        r = fp.rank_mod_p(self.fq_span_matrix(elems), self.p)
        if r % self.h:
            raise InternalError("F_p-rank of an F_q-span is not a multiple of h")
        return r // self.h

    def batch_fq_rank(self, tuples) -> np.ndarray:
        """F_q-ranks of many k-tuples at once; ``tuples`` has shape (B, k)."""
        t = np.asarray(tuples, dtype=np.int64)
        dig = self.ctx.decode(t)
        rows = np.einsum("lab,nkb->nkla", self._gamma_mats, dig) % self.p
        rows = rows.reshape(t.shape[0], -1, self.E)
        return fp.batch_rank_mod_p(rows, self.p) // self.h

    def random_element(self, rng) -> int:
        return rng.randrange(self.ctx.order)


@lru_cache(maxsize=None)
def tower_level(p: int, h: int, N: int) -> TowerLevel:
    return TowerLevel(p, h, N)


@lru_cache(maxsize=None)
def level_embedding(p: int, h: int, N1: int, N2: int) -> np.ndarray:
    """F_p-matrix of the embedding GF(q^N1) -> GF(q^N2) that fixes the GF(q) images.

    Among the embeddings mapping gamma_(N1) to gamma_(N2), the one sending the
    generator of GF(q^N1) to the least-encoded root is chosen.
    """
    if N2 % N1:
        raise InvalidInput(f"GF(q^{N1}) is not a subfield of GF(q^{N2})")
    small, big = tower_level(p, h, N1), tower_level(p, h, N2)
    if N1 == N2:
        return np.eye(small.E, dtype=np.int64)
    for root in _subfield_roots(small.ctx, big.ctx):
        mat = _embedding_matrix(small.ctx, big.ctx, root)
        img = big.ctx.encode((mat @ np.array(small.ctx.digits(small.gamma))) % p)
        if int(img) == big.gamma:
            return mat
    raise InternalError("no embedding compatible with the GF(q) images")


def embed(x: int, src: TowerLevel, dst: TowerLevel) -> int:
    mat = level_embedding(src.p, src.h, src.N, dst.N)
    return int(dst.ctx.encode((mat @ np.array(src.ctx.digits(x), dtype=np.int64)) % src.p))


def vembed(arr, src: TowerLevel, dst: TowerLevel) -> np.ndarray:
    mat = level_embedding(src.p, src.h, src.N, dst.N)
    return dst.ctx.vlinear(mat, arr)


class FieldTower:
    """GF(p) < GF(q) < GF(q^n) < GF(q^(nm)), with q = p^h."""

    def __init__(self, p: int, h: int, n: int, m: int = 1):
        self.p, self.h, self.n, self.m = p, h, n, m
        self.q = p**h
        self.base = tower_level(p, h, 1)
        self.mid = tower_level(p, h, n)
        self.top = tower_level(p, h, n * m)

    def level(self, N: int) -> TowerLevel:
        for lv in (self.base, self.mid, self.top):
            if lv.N == N:
                return lv
        raise InvalidInput(f"no level GF(q^{N}) in {self!r}")

    def with_m(self, m: int) -> "FieldTower":
        return make_tower(self.p, self.h, self.n, m)

    def embed(self, x: int) -> int:
        """GF(q^n) -> GF(q^(nm))."""
        return embed(x, self.mid, self.top)

    def spec(self) -> dict:
        return {
            "p": self.p,
            "h": self.h,
            "n": self.n,
            "m": self.m,
            "defining_polys": [list(lv.ctx.modulus) for lv in (self.base, self.mid, self.top)],
        }

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, h={self.h}, n={self.n}, m={self.m})"


def make_tower(p: int, h: int, n: int, m: int = 1, max_field_size: int = MAX_FIELD_SIZE) -> FieldTower:
    for name, v in (("h", h), ("n", n), ("m", m)):
        if not isinstance(v, int) or v < 1:
            raise InvalidInput(f"{name} must be a positive integer")
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if p ** (h * n * m) > max_field_size:
        raise InvalidInput(f"GF({p}^{h * n * m}) exceeds the field size limit {max_field_size}")
    return _make_tower(p, h, n, m)


@lru_cache(maxsize=None)
def _make_tower(p, h, n, m) -> FieldTower:
    return FieldTower(p, h, n, m)


def tower_from_spec(spec: dict, max_field_size: int = MAX_FIELD_SIZE) -> FieldTower:
    allowed = {"p", "h", "n", "m", "q", "defining_polys"}
    unknown = set(spec) - allowed
    if unknown:
        raise InvalidInput(f"unknown field spec keys: {sorted(unknown)}")
    if "q" in spec:
        p, h = prime_power(int(spec["q"]))
        if "p" in spec and int(spec["p"]) != p or "h" in spec and int(spec["h"]) != h:
            raise InvalidInput("q disagrees with p, h")
    else:
        if "p" not in spec:
            raise InvalidInput("field spec needs p (or q)")
        p, h = int(spec["p"]), int(spec.get("h", 1))
    if "n" not in spec:
        raise InvalidInput("field spec needs n")
    tower = make_tower(p, h, int(spec["n"]), int(spec.get("m", 1)), max_field_size)
    if "defining_polys" in spec:
        if [list(map(int, d)) for d in spec["defining_polys"]] != tower.spec()["defining_polys"]:
            raise InvalidInput("only the lexicographically minimal defining polynomials are supported")
    return tower


# -- module-level conveniences ----------------------------------------------------

def frobenius(level: TowerLevel, x, i: int = 1) -> int:
    return level.frob(level.ctx.check(x), i)


def trace_rel(level: TowerLevel, x) -> int:
    return level.trace(x)


def norm_rel(level: TowerLevel, x) -> int:
    return level.norm(x)


def fq_rank(level: TowerLevel, elems) -> int:
    ctxs = {e.ctx.e for e in elems if isinstance(e, FieldElem)}
    if ctxs and ctxs != {level.ctx.e}:
        raise InvalidInput("mixed field contexts")
    return level.fq_rank(elems)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
