"""Sparse multivariate polynomials over a finite field.

Terms live in a dict mapping exponent tuples to nonzero coefficient encodings.
The canonical order (used for serialization and printing) is graded
lexicographic, highest total degree first.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInput
from .gf import FieldCtx


def _binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    out = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        num = den = 1
        for i in range(b):
            num = num * (a - i) % p
            den = den * (i + 1) % p
        out = out * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return out


class MvPoly:
    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx: FieldCtx, nvars: int, terms=None):
        self.ctx = ctx
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise InvalidInput(f"exponent {e} does not have {nvars} entries")
            c = ctx.check(int(c))
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ctx, nvars, terms) -> "MvPoly":
        out = cls.__new__(cls)
        out.ctx, out.nvars, out.terms = ctx, nvars, terms
        return out

    @classmethod
    def const(cls, ctx: FieldCtx, nvars: int, c: int) -> "MvPoly":
        return cls(ctx, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, ctx: FieldCtx, nvars: int, i: int, power: int = 1) -> "MvPoly":
        e = [0] * nvars
        e[i] = power
        return cls(ctx, nvars, {tuple(e): 1})

    @classmethod
    def linear_form(cls, ctx: FieldCtx, coeffs) -> "MvPoly":
        n = len(coeffs)
        return cls(ctx, n, {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)})

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def to_json(self) -> list:
        return [[list(e), c] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, ctx: FieldCtx, data) -> "MvPoly":
        if not data:
            raise InvalidInput("cannot infer the number of variables of an empty term list")
        nvars = len(data[0][0])
        out = {}
        for e, c in data:
            e = tuple(int(x) for x in e)
            if e in out:
                raise InvalidInput(f"repeated exponent {e}")
            out[e] = int(c)
        return cls(ctx, nvars, out)

    def __eq__(self, other):
        return (isinstance(other, MvPoly) and self.ctx is other.ctx and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"X{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def _same(self, other: "MvPoly") -> None:
        if not isinstance(other, MvPoly) or other.ctx is not self.ctx or other.nvars != self.nvars:
            raise InvalidInput("polynomials over different rings")

    # ring operations
    def __add__(self, other: "MvPoly") -> "MvPoly":
        self._same(other)
        add = self.ctx.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MvPoly._raw(self.ctx, self.nvars, out)

    def __neg__(self) -> "MvPoly":
        return MvPoly._raw(self.ctx, self.nvars, {e: self.ctx.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "MvPoly") -> "MvPoly":
        return self + (-other)

    def scale(self, c: int) -> "MvPoly":
        c = self.ctx.check(c)
        if not c:
            return MvPoly._raw(self.ctx, self.nvars, {})
        return MvPoly._raw(self.ctx, self.nvars, {e: self.ctx.mul(c, a) for e, a in self.terms.items()})

    def __mul__(self, other: "MvPoly") -> "MvPoly":
        self._same(other)
        ctx = self.ctx
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = ctx.add(out.get(e, 0), ctx.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MvPoly._raw(ctx, self.nvars, out)

    # calculus and substitution
    def derivative(self, i: int) -> "MvPoly":
        """Formal partial derivative; exponents divisible by p drop out."""
        p = self.ctx.p
        out = {}
        for e, c in self.terms.items():
            if e[i] % p:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = self.ctx.scal(e[i] % p, c)
        return MvPoly._raw(self.ctx, self.nvars, out)

    def homogeneous_part(self, d: int) -> "MvPoly":
        return MvPoly._raw(self.ctx, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def lowest_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def substitute(self, values: dict) -> "MvPoly":
        """Replace the variables in ``values`` (index -> element) and drop them."""
        ctx = self.ctx
        keep = [i for i in range(self.nvars) if i not in values]
        out: dict = {}
        for e, c in self.terms.items():
            for i, v in values.items():
                if e[i]:
                    c = ctx.mul(c, ctx.pow(ctx.check(int(v)), e[i]))
            if c:
                ne = tuple(e[i] for i in keep)
                s = ctx.add(out.get(ne, 0), c)
                if s:
                    out[ne] = s
                else:
                    out.pop(ne, None)
        return MvPoly._raw(ctx, len(keep), out)

    def translate(self, point) -> "MvPoly":
        """The polynomial P(X + point)."""
        ctx = self.ctx
        p = ctx.p
        point = [ctx.check(int(u)) for u in point]
        out: dict = {}
        for e, c in self.terms.items():
            # expand prod_i (X_i + u_i)^(e_i) one variable at a time
            partial = {(): c}
            for i, ei in enumerate(e):
                nxt: dict = {}
                u = point[i]
                for j in range(ei + 1):
                    b = _binom_mod_p(ei, j, p)
                    if not b:
                        continue
                    rest = ei - j
                    if rest and not u:
                        continue
                    coef = ctx.scal(b, ctx.pow(u, rest)) if rest else ctx.scal(b, 1)
                    for pe, pc in partial.items():
                        key = pe + (j,)
                        v = ctx.add(nxt.get(key, 0), ctx.mul(pc, coef))
                        if v:
                            nxt[key] = v
                        else:
                            nxt.pop(key, None)
                partial = nxt
            for ne, v in partial.items():
                s = ctx.add(out.get(ne, 0), v)
                if s:
                    out[ne] = s
                else:
                    out.pop(ne, None)
        return MvPoly._raw(ctx, self.nvars, out)

    # evaluation
    def evaluate(self, point) -> int:
        ctx = self.ctx
        point = [ctx.check(int(u)) for u in point]
        acc = 0
        for e, c in self.terms.items():
            v = c
            for u, x in zip(point, e):
                if x:
                    v = ctx.mul(v, ctx.pow(u, x))
            acc = ctx.add(acc, v)
        return acc

    def veval(self, points) -> np.ndarray:
        """Evaluate at each row of a (B, nvars) array of elements."""
        ctx = self.ctx
        pts = np.asarray(points, dtype=np.int64)
        acc = np.zeros(pts.shape[0], dtype=np.int64)
        cache: dict = {}
        for e, c in self.terms.items():
            v = np.full(pts.shape[0], c, dtype=np.int64)
            for i, x in enumerate(e):
                if x:
                    if (i, x) not in cache:
                        cache[(i, x)] = ctx.vpow(pts[:, i], x)
                    v = ctx.vmul(v, cache[(i, x)])
            acc = ctx.vadd(acc, v)
        return acc

    # division by a linear form
    def divmod_linear(self, form: "MvPoly"):
        """Divide by X_j + sum_{i>j} a_i X_i, with j the first variable present.

        Synthetic division in X_j; returns (quotient, remainder) and the
        remainder does not involve X_j.
        """
        self._same(form)
        lin = {e.index(1): c for e, c in form.terms.items()}
        if form.degree() != 1 or form.lowest_degree() != 1:
            raise InvalidInput("divisor must be a linear form")
        j = min(lin)
        if lin[j] != 1:
            raise InvalidInput("linear form must be normalized with leading coefficient 1")
        r = MvPoly._raw(self.ctx, self.nvars, {e: c for e, c in form.terms.items() if e[j] == 0})
        # group by the exponent of X_j
        slices: dict[int, dict] = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[j] = 0
            slices.setdefault(e[j], {})[tuple(ne)] = c
        if not slices:
            return self, self
        top = max(slices)
        coeff = [MvPoly._raw(self.ctx, self.nvars, slices.get(d, {})) for d in range(top + 1)]
        b = [None] * top
        carry = MvPoly._raw(self.ctx, self.nvars, {})
        for d in range(top, 0, -1):
            cur = coeff[d] - r * carry if d < top else coeff[d]
            b[d - 1] = cur
            carry = cur
        rem = coeff[0] - r * carry if top > 0 else coeff[0]
        quot: dict = {}
        for d, poly in enumerate(b):
            for e, c in poly.terms.items():
                ne = list(e)
                ne[j] = d
                quot[tuple(ne)] = c
        return MvPoly._raw(self.ctx, self.nvars, quot), rem

    def exact_div_linear(self, form: "MvPoly") -> "MvPoly":
        q, rem = self.divmod_linear(form)
        if not rem.is_zero():
            raise ArithmeticError(f"{form!r} does not divide the polynomial (remainder {rem!r})")
        return q


def homogenize(P: MvPoly) -> MvPoly:
    """Add a last variable T: T^deg * P(X / T), with every common power of T removed."""
    d = P.degree()
    terms = {e + (d - sum(e),): c for e, c in P.terms.items()}
    low = min((e[-1] for e in terms), default=0)
    terms = {e[:-1] + (e[-1] - low,): c for e, c in terms.items()}
    return MvPoly._raw(P.ctx, P.nvars + 1, terms)
