import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moorecodes import InvalidInput, LinPoly
from moorecodes.gf import embed, tower_level
from moorecodes.linpoly import random_invertible, random_poly
from reference import RefField, kernel_dim

LV = tower_level(2, 1, 4)
LV3 = tower_level(3, 1, 4)


def coeff_lists(level):
    return st.lists(st.integers(0, level.ctx.order - 1), min_size=level.N, max_size=level.N)


@settings(max_examples=40, deadline=None)
@given(coeff_lists(LV), coeff_lists(LV))
def test_composition_is_evaluation_composition(a, b):
    f, g = LinPoly(LV, a), LinPoly(LV, b)
    fg = f.compose(g)
    for x in range(LV.ctx.order):
        assert fg.evaluate(x) == f.evaluate(g.evaluate(x))


@settings(max_examples=30, deadline=None)
@given(coeff_lists(LV3))
def test_kernel_dim_matches_root_count(a):
    f = LinPoly(LV3, a)
    ref = RefField(3, list(LV3.ctx.modulus))
    expected = kernel_dim(ref, 3, a)
    assert f.kernel_dim() == expected
    assert f.kernel_dim_fp() == expected
    assert f.rank() == 4 - expected


@settings(max_examples=30, deadline=None)
@given(coeff_lists(LV), st.integers(0, 15), st.integers(0, 15))
def test_linearity(a, x, y):
    f = LinPoly(LV, a)
    ctx = LV.ctx
    assert f.evaluate(ctx.add(x, y)) == ctx.add(f.evaluate(x), f.evaluate(y))
    assert f.evaluate(0) == 0


def test_frobenius_powers_compose_cyclically():
    X = LinPoly.monomial
    assert X(LV, 1).compose(X(LV, 3)) == X(LV, 0)
    assert X(LV, 2).compose(X(LV, 3)) == X(LV, 1)


def test_degrees_and_shape():
    f = LinPoly.from_terms(LV, [(1, 3), (3, 1)])
    assert (f.mindeg, f.qdeg) == (1, 3)
    assert not f.is_separable
    assert f.is_monic()
    assert not f.is_monomial
    assert LinPoly.monomial(LV, 2).is_monomial
    assert f.terms() == [(1, 3), (3, 1)]


def test_kernels_of_small_examples():
    # x^q - x over GF(16)/GF(2) has kernel GF(2); x^(q^2) - x has kernel GF(4)
    f = LinPoly.from_terms(LV, [(0, 1), (1, 1)])
    g = LinPoly.from_terms(LV, [(0, 1), (2, 1)])
    assert f.kernel_dim() == 1 and f.kernel_dim_fp() == 1
    assert g.kernel_dim() == 2 and g.kernel_dim_fp() == 2
    assert sorted(g.kernel()) and all(g.evaluate(a) == 0 for a in g.kernel())


def test_kernel_over_nonprime_base():
    lv = tower_level(2, 2, 3)  # GF(64) over GF(4)
    f = LinPoly.from_terms(lv, [(0, 1), (1, 1)])  # x^4 + x, kernel GF(4)
    assert f.kernel_dim() == 1
    assert f.kernel_dim_fp() == 1


def test_lift_preserves_values():
    big = tower_level(2, 1, 8)
    f = LinPoly(LV, [3, 0, 7, 1])
    F = f.lift(big)
    for x in range(16):
        assert F.evaluate(embed(x, LV, big)) == embed(f.evaluate(x), LV, big)


def test_json_round_trip():
    f = LinPoly(LV, [3, 0, 7, 1])
    assert LinPoly.from_json(LV, f.to_json()) == f
    assert LinPoly.from_json(LV, {"terms": [[0, 3], [2, 7], [3, 1]]}) == f
    with pytest.raises(InvalidInput):
        LinPoly.from_json(LV, {"coef": [1]})
    with pytest.raises(InvalidInput):
        LinPoly.from_terms(LV, [(4, 1)])


def test_random_invertible_is_deterministic():
    f = random_invertible(LV, 7)
    assert f == random_invertible(LV, 7)
    assert f.is_invertible()
    assert f.kernel_dim() == 0


def test_apply_rho_is_coefficient_frobenius():
    f = random_poly(LV3, random.Random(3))
    g = f.apply_rho(1)
    assert list(g.coeffs) == [LV3.ctx.pow(a, 3) for a in f.coeffs]
    # a -> a^p on coefficients conjugates evaluation by the same automorphism
    for x in range(0, 81, 7):
        assert g.evaluate(LV3.ctx.pow(x, 3)) == LV3.ctx.pow(f.evaluate(x), 3)


def test_arithmetic():
    f = LinPoly(LV, [1, 2, 0, 0])
    g = LinPoly(LV, [1, 0, 0, 5])
    assert (f + g) - g == f
    assert (f - f).is_zero()
    assert f.scale(0).is_zero()
    for x in range(16):
        assert f.scale(6).evaluate(x) == LV.ctx.mul(6, f.evaluate(x))
