import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moorecodes import InvalidInput, LinPoly
from moorecodes import moore, variety
from moorecodes.gf import tower_level
from moorecodes.mvpoly import MvPoly, homogenize
from moorecodes.suites import oracle_pool

LV = tower_level(2, 1, 4)
LV3 = tower_level(3, 1, 4)
X = LinPoly.monomial


def mv(ctx, n, terms):
    return MvPoly(ctx, n, dict(terms))


def test_F_of_x_xq():
    F = variety.build_F([X(LV, 0), X(LV, 1)])
    assert F == mv(LV.ctx, 2, {(2, 1): 1, (1, 2): 1})


def test_worked_W():
    W = variety.build_W([X(LV, 0), X(LV, 2)])
    assert W == mv(LV.ctx, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert W.to_json() == [[[2, 0], 1], [[1, 1], 1], [[0, 2], 1]]


@pytest.mark.parametrize("lv,k", [(LV, 2), (LV, 3), (LV3, 2)])
def test_V_equals_moore_determinant(lv, k):
    V = variety.build_V(lv, k)
    F = variety.build_F([X(lv, i) for i in range(k)])
    assert V == F
    assert V.degree() == (lv.q**k - 1) // (lv.q - 1)


def test_W_times_V_is_F_on_pool():
    for _, _, polys in oracle_pool(n_random=10, seed=3):
        W = variety.build_W(polys)
        F = variety.build_F(polys)
        assert W * variety.build_V(LV, 2) == F
        assert W.degree() == sum(2**M for M in moore.as_moore_set(polys).degrees) - 3


def test_points_off_V_agree_with_oracle():
    for polys in ([X(LV, 0), X(LV, 2)], [X(LV, 0), X(LV, 1)]):
        W = variety.build_W(polys)
        pts = variety.points_off_V(W, polys)
        assert (not pts) == moore.is_moore_oracle(polys).verdict
        for P in pts:
            assert moore.verify_witness(polys, P)


def test_homogenize_f():
    f = X(LV, 0) + X(LV, 2)
    H = variety.homogenize_f(f)
    assert H == mv(LV.ctx, 2, {(4, 0): 1, (1, 3): 1})
    with pytest.raises(InvalidInput):
        variety.homogenize_f(LinPoly.zero(LV))


def test_specialized_curve_and_points_at_infinity():
    polys = [X(LV, 0), X(LV, 1), X(LV, 2)]
    H = variety.specialize_curve(polys, [2])
    assert H.degree() == 6
    assert variety.points_at_infinity(H) == [(0, 1, 0), (1, 0, 0), (1, 1, 0)]
    with pytest.raises(InvalidInput):
        variety.specialize_curve(polys, [0])
    with pytest.raises(InvalidInput):
        variety.specialize_curve(polys, [1, 2])


@pytest.mark.parametrize("q", [2, 3])
def test_lowest_form_at_origin(q):
    lv = tower_level(q, 1, 2)
    H = variety.build_F([X(lv, 0), X(lv, 1)])  # X1 X2^q - X2 X1^q
    m, Fm, Fm1 = variety.translate_lowest_form(H, (0, 0))
    assert m == q + 1
    assert Fm == H and Fm1.is_zero()


def test_singular_points():
    H = variety.build_F([X(LV, 0), X(LV, 1)])
    sing = variety.singular_points_affine(H)
    # X1 X2^2 + X1^2 X2 = X1 X2 (X1 + X2): the three lines meet only at the origin
    assert sing == [(0, 0)]


# -- MvPoly arithmetic ------------------------------------------------------------------

CTX = LV.ctx


@st.composite
def polys2(draw):
    n = draw(st.integers(1, 5))
    return MvPoly(CTX, 2, {(draw(st.integers(0, 4)), draw(st.integers(0, 4))): draw(st.integers(1, 15))
                           for _ in range(n)})


@settings(max_examples=40, deadline=None)
@given(polys2(), st.integers(0, 15))
def test_exact_division_by_linear_form(P, a):
    L = MvPoly.linear_form(CTX, [1, a])
    assert (P * L).exact_div_linear(L) == P
    q, r = P.divmod_linear(L)
    assert q * L + r == P
    assert all(e[0] == 0 for e in r.terms)


@settings(max_examples=40, deadline=None)
@given(polys2(), st.integers(0, 15), st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_translate_and_evaluate(P, u, v, x, y):
    T = P.translate((u, v))
    assert T.evaluate((x, y)) == P.evaluate((CTX.add(x, u), CTX.add(y, v)))
    assert T.translate((u, v)) == P  # characteristic 2: translating twice is the identity


@settings(max_examples=30, deadline=None)
@given(polys2(), polys2())
def test_ring_laws(P, Q):
    assert P * Q == Q * P
    assert (P + Q) - Q == P
    pts = [(1, 2), (3, 7), (0, 5)]
    assert list((P * Q).veval(pts)) == [CTX.mul(P.evaluate(t), Q.evaluate(t)) for t in pts]


def test_derivative_drops_multiples_of_p():
    lv = tower_level(3, 1, 2)
    P = mv(lv.ctx, 2, {(3, 1): 1, (2, 0): 1})
    assert P.derivative(0) == mv(lv.ctx, 2, {(1, 0): 2})


def test_mvpoly_json_and_homogenize():
    P = mv(CTX, 2, {(2, 0): 1, (0, 1): 3})
    assert MvPoly.from_json(CTX, P.to_json()) == P
    assert homogenize(P) == mv(CTX, 3, {(2, 0, 0): 1, (0, 1, 1): 3})
    with pytest.raises(InvalidInput):
        MvPoly.from_json(CTX, [[[1, 0], 1], [[1, 0], 2]])


def test_identically_zero_curve_gives_certificate():
    # all three polynomials vanish at 1, so fixing X_3 = 1 kills the determinant
    polys = [X(LV, 0) + X(LV, 2), X(LV, 0) + X(LV, 3), X(LV, 0) + X(LV, 1)]
    assert variety.specialize_curve(polys, [1]).is_zero()
    w = variety.zero_curve_witness(polys, [1])
    assert w[2] == 1 and moore.verify_witness(polys, w)
    with pytest.raises(InvalidInput):
        variety.zero_curve_witness(polys, [2])
