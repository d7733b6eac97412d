"""Determinantal hypersurfaces attached to a tuple of linearized polynomials.

F is det(f_j(X_i)), V is the same determinant for (x, x^q, ..., x^(q^(k-1)))
(the product of all F_q-rational linear forms), and W = F / V.  The tuple is
a Moore set iff every affine GF(q^n)-point of W has F_q-dependent
coordinates, i.e. lies on V.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from . import sweep
from .errors import GuardExceeded, InternalError, InvalidInput, check_guard
from .gf import TowerLevel
from .linpoly import LinPoly
from .moore import MooreReport, as_moore_set, verify_witness
from .mvpoly import MvPoly

DEFAULT_MAX_TERMS = 2_000_000


def _entry(level: TowerLevel, f: LinPoly, i: int, k: int) -> MvPoly:
    """f evaluated at the variable X_i, as a polynomial in k variables."""
    terms = {}
    for l, a in f.terms():
        e = [0] * k
        e[i] = level.q**l
        terms[tuple(e)] = a
    return MvPoly(level.ctx, k, terms)


def build_F(fset, max_terms: int = DEFAULT_MAX_TERMS) -> MvPoly:
    """det(f_j(X_i)) by Laplace expansion along rows, memoized on column sets."""
    fset = as_moore_set(fset)
    lv, k = fset.level, fset.k
    entries = [[_entry(lv, f, i, k) for f in fset.polys] for i in range(k)]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple) -> MvPoly:
        if not cols:
            return MvPoly.const(lv.ctx, k, 1)
        acc = MvPoly(lv.ctx, k)
        for pos, c in enumerate(cols):
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entries[row][c] * sub
            acc = acc - term if pos % 2 else acc + term
            if len(acc) > max_terms:
                raise GuardExceeded("determinant expansion (terms)", len(acc), max_terms)
        return acc

    return minor(0, tuple(range(k)))


def projective_points(q_ctx, k: int):
    """Points of PG(k-1, q) with first nonzero coordinate 1, lexicographic."""
    for lead in range(k):
        for rest in product(range(q_ctx.order), repeat=k - 1 - lead):
            yield (0,) * lead + (1,) + tuple(rest)


def linear_forms(level: TowerLevel, k: int) -> list[MvPoly]:
    """a_1 X_1 + ... + a_k X_k over the normalized points of PG(k-1, q)."""
    return [MvPoly.linear_form(level.ctx, [level.embed_base(a) if a else 0 for a in pt])
            for pt in projective_points(level.base, k)]


def v_sign(level: TowerLevel, k: int) -> int:
    """Constant c with det(X_i^(q^(j-1))) = c * product of the normalized forms."""
    return level.ctx.neg(1) if (k * (k - 1) // 2) % 2 else 1


def build_V(level: TowerLevel, k: int, max_steps: int | None = None) -> MvPoly:
    """Product of the F_q-rational linear forms, scaled to equal the Moore determinant."""
    count = (level.q**k - 1) // (level.q - 1)
    check_guard("linear forms of V", count, max_steps)
    acc = MvPoly.const(level.ctx, k, v_sign(level, k))
    for form in linear_forms(level, k):
        acc = acc * form
    return acc


def build_W(fset, max_terms: int = DEFAULT_MAX_TERMS) -> MvPoly:
    """Exact quotient F / V by successive division by every linear form of V."""
    fset = as_moore_set(fset)
    lv, k = fset.level, fset.k
    F = build_F(fset, max_terms)
    W = F
    for form in linear_forms(lv, k):
        q, rem = W.divmod_linear(form)
        if not rem.is_zero():
            raise InternalError(f"linear form {form!r} does not divide the determinant")
        W = q
    W = W.scale(lv.ctx.inv(v_sign(lv, k)))
    V = build_V(lv, k)
    if W * V != F:
        raise InternalError("W * V differs from F after division")
    # with distinct q-degrees the leading terms of F cannot cancel
    if len(set(fset.degrees)) == k:
        expected = sum(lv.q**M for M in fset.degrees) - (lv.q**k - 1) // (lv.q - 1)
    else:
        expected = F.degree() - V.degree()
    if W.degree() != expected:
        raise InternalError(f"deg W = {W.degree()}, expected {expected}")
    return W


def _all_points(level: TowerLevel, k: int, chunk: int):
    yield from sweep.all_tuples(k, level.ctx.order, chunk)


def points_off_V(W: MvPoly, fset, max_steps: int | None = None, first_only: bool = False) -> list[tuple]:
    """Affine GF(q^n)-points of W whose coordinates are F_q-independent."""
    fset = as_moore_set(fset)
    lv, k = fset.level, fset.k
    if W.nvars != k:
        raise InvalidInput(f"W has {W.nvars} variables, expected {k}")
    check_guard("affine points of W", lv.ctx.order**k, max_steps)
    out = []
    for pts in _all_points(lv, k, 1 << 16):
        vals = W.veval(pts)
        idx = np.nonzero(vals == 0)[0]
        if idx.size == 0:
            continue
        cand = pts[idx]
        ranks = lv.batch_fq_rank(cand)
        for row in cand[ranks == k]:
            out.append(tuple(int(a) for a in row))
            if first_only:
                return out
    return out


def is_moore_variety(fset, max_steps: int | None = None) -> MooreReport:
    """Moore test by rational points: no point of W off V."""
    fset = as_moore_set(fset)
    W = build_W(fset)
    pts = points_off_V(W, fset, max_steps, first_only=True)
    steps = fset.level.ctx.order ** fset.k
    if not pts:
        return MooreReport(True, None, "variety", steps, {"deg_W": W.degree()})
    witness = pts[0]
    if W.evaluate(witness) != 0 or not verify_witness(fset, witness):
        raise InternalError("variety witness failed re-verification")
    return MooreReport(False, witness, "variety", steps, {"deg_W": W.degree()})


def homogenize_f(f: LinPoly) -> MvPoly:
    """sum_j a_j x^(q^j) z^(q^M - q^j) in variables (x, z), M = deg_q f."""
    if f.is_zero():
        raise InvalidInput("cannot homogenize the zero polynomial")
    lv = f.level
    M = f.qdeg
    terms = {(lv.q**j, lv.q**M - lv.q**j): a for j, a in f.terms()}
    out = MvPoly(lv.ctx, 2, terms)
    if not out.is_homogeneous() or out.degree() != lv.q**M:
        raise InternalError("homogenization is not homogeneous of degree q^M")
    return out


def specialize_curve(fset, lambdas) -> MvPoly:
    """F(X_1, X_2, l_3, ..., l_k) as a polynomial in X_1, X_2."""
    fset = as_moore_set(fset)
    lv, k = fset.level, fset.k
    lambdas = [lv.ctx.check(int(a)) for a in lambdas]
    if k < 2:
        raise InvalidInput("curves need k >= 2")
    if len(lambdas) != k - 2:
        raise InvalidInput(f"expected {k - 2} values")
    if lambdas and lv.fq_rank(lambdas) != len(lambdas):
        raise InvalidInput("the specialization values must be F_q-independent")
    F = build_F(fset)
    return F.substitute({i + 2: a for i, a in enumerate(lambdas)})


def zero_curve_witness(fset, lambdas) -> tuple:
    """Failure certificate when the specialized curve vanishes identically.

    Then every (a_1, a_2, l_3, ..., l_k) gives a singular Moore matrix, so the
    lexicographically first pair completing the l's to an F_q-independent
    tuple is a witness.
    """
    fset = as_moore_set(fset)
    lv = fset.level
    lambdas = [lv.ctx.check(int(a)) for a in lambdas]
    if not specialize_curve(fset, lambdas).is_zero():
        raise InvalidInput("the specialized curve is not identically zero")
    for a in range(1, lv.ctx.order):
        for b in range(a + 1, lv.ctx.order):
            pts = (a, b, *lambdas)
            if lv.fq_rank(list(pts)) == fset.k:
                if not verify_witness(fset, pts):
                    raise InternalError("zero curve without a singular Moore matrix")
                return pts
    raise InternalError("no F_q-independent completion of the specialization values")


def translate_lowest_form(H: MvPoly, point):
    """(m, F_m, F_{m+1}) for H translated so that ``point`` becomes the origin."""
    if H.is_zero():
        raise InvalidInput("zero polynomial")
    T = H.translate(point)
    m = T.lowest_degree()
    return m, T.homogeneous_part(m), T.homogeneous_part(m + 1)


def points_at_infinity(H: MvPoly) -> list[tuple]:
    """Roots (X_1 : X_2 : 0) of the top-degree form of a bivariate H."""
    if H.nvars != 2:
        raise InvalidInput("expected a bivariate polynomial")
    if H.is_zero():
        raise InvalidInput("zero polynomial")
    top = H.homogeneous_part(H.degree())
    if H.degree() == 0:
        return []
    ctx = H.ctx
    out = []
    if top.evaluate((0, 1)) == 0:
        out.append((0, 1, 0))
    gam = np.arange(ctx.order, dtype=np.int64)
    vals = top.veval(np.stack([np.ones_like(gam), gam], axis=1))
    out.extend((1, int(g), 0) for g in gam[vals == 0])
    return out


def singular_points_affine(H: MvPoly, max_steps: int | None = None) -> list[tuple]:
    """Points of GF(q^n)^2 where H and both partial derivatives vanish."""
    if H.nvars != 2:
        raise InvalidInput("expected a bivariate polynomial")
    ctx = H.ctx
    check_guard("affine plane points", ctx.order**2, max_steps)
    d1, d2 = H.derivative(0), H.derivative(1)
    out = []
    for pts in sweep.all_tuples(2, ctx.order, 1 << 16):
        mask = H.veval(pts) == 0
        if not mask.any():
            continue
        cand = pts[mask]
        cand = cand[d1.veval(cand) == 0]
        if len(cand):
            cand = cand[d2.veval(cand) == 0]
        out.extend(tuple(int(a) for a in row) for row in cand)
    return out
