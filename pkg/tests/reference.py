"""Slow, independent reference arithmetic used as a test oracle.

Nothing here imports the package: field elements are coefficient lists
reduced by schoolbook division, and kernels are counted by evaluating a
linearized polynomial at every element.  Encodings match the wire format
(base-p digits, lowest degree first).
"""

from itertools import product


class RefField:
    def __init__(self, p, modulus):
        self.p = p
        self.mod = list(modulus)  # monic, lowest degree first
        self.e = len(modulus) - 1
        self.order = p**self.e

    def dec(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def enc(self, v):
        return sum(c * self.p**i for i, c in enumerate(v))

    def add(self, a, b):
        return self.enc([(x + y) % self.p for x, y in zip(self.dec(a), self.dec(b))])

    def sub(self, a, b):
        return self.enc([(x - y) % self.p for x, y in zip(self.dec(a), self.dec(b))])

    def mul(self, a, b):
        x, y = self.dec(a), self.dec(b)
        prod = [0] * (2 * self.e)
        for i, c in enumerate(x):
            for j, d in enumerate(y):
                prod[i + j] = (prod[i + j] + c * d) % self.p
        for d in range(len(prod) - 1, self.e - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(self.mod):
                    prod[d - self.e + i] = (prod[d - self.e + i] - c * m) % self.p
        return self.enc(prod[: self.e])

    def pow(self, a, k):
        out = 1
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def fast_pow(self, a, k):
        out, base = 1, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, a):
        return next(b for b in range(1, self.order) if self.mul(a, b) == 1)


def lin_eval(F, q, coeffs, x):
    """sum_i a_i x^(q^i) in the field F."""
    acc, xi = 0, x
    for a in coeffs:
        if a:
            acc = F.add(acc, F.mul(a, xi))
        xi = F.fast_pow(xi, q)
    return acc


def kernel_size(F, q, coeffs):
    return sum(1 for x in range(F.order) if lin_eval(F, q, coeffs, x) == 0)


def kernel_dim(F, q, coeffs):
    size, d = kernel_size(F, q, coeffs), 0
    while q**d < size:
        d += 1
    assert q**d == size
    return d


def codewords(F, basis):
    """All F-linear combinations of the basis (coefficient lists), paired with the scalars."""
    n = len(basis[0])
    for scal in product(range(F.order), repeat=len(basis)):
        w = [0] * n
        for s, f in zip(scal, basis):
            for i in range(n):
                w[i] = F.add(w[i], F.mul(s, f[i]))
        yield scal, w


def det(F, m):
    """Determinant by Laplace expansion along the first row."""
    if len(m) == 1:
        return m[0][0]
    acc = 0
    for j in range(len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = F.mul(m[0][j], det(F, minor))
        acc = F.sub(acc, term) if j % 2 else F.add(acc, term)
    return acc


def fq_independent(F, q, points):
    """No nontrivial F_q-combination (GF(q) = prime field here) of the points vanishes."""
    assert q == F.p
    for c in product(range(q), repeat=len(points)):
        if any(c):
            acc = 0
            for ci, a in zip(c, points):
                for _ in range(ci):
                    acc = F.add(acc, a)
            if acc == 0:
                return False
    return True


def _poly_rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def min_irreducible(p, e):
    """Monic irreducible of degree e with least encoding sum c_i p^i, by trial division."""
    for code in range(p**e):
        f = [(code // p**i) % p for i in range(e)] + [1]
        ok = True
        for d in range(1, e // 2 + 1):
            for dc in range(p**d):
                g = [(dc // p**i) % p for i in range(d)] + [1]
                if not _poly_rem(f, g, p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return f
