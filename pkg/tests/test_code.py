import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moorecodes import GuardExceeded, InvalidInput, LinPoly, RankMetricCode, new_code
from moorecodes import code as codes
from moorecodes.gf import tower_level
from moorecodes.linpoly import random_invertible
from moorecodes.suites import random_code
from reference import RefField, codewords, kernel_dim

LV = tower_level(2, 1, 4)
REF = RefField(2, list(LV.ctx.modulus))
X = LinPoly.monomial


def ref_rank_distribution(C):
    """A_0..A_n by evaluating every codeword at every field element."""
    dist = Counter()
    for _, w in codewords(REF, [list(f.coeffs) for f in C.basis]):
        dist[4 - kernel_dim(REF, 2, w)] += 1
    return [dist[r] for r in range(5)]


def test_rank_distributions_of_monomial_codes():
    # reference sweep: <x, x^q> has 225 codewords of rank 3 and 30 of rank 4
    assert codes.rank_distribution(new_code([X(LV, 0), X(LV, 1)])) == [1, 0, 0, 225, 30]
    assert codes.rank_distribution(new_code([X(LV, 0), X(LV, 2)])) == [1, 0, 75, 0, 180]


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_mrd_verdict_matches_reference(seed, k):
    C = random_code(LV, k, random.Random(seed))
    dist = ref_rank_distribution(C)
    assert codes.rank_distribution(C) == dist
    d = next(r for r in range(1, 5) if dist[r])
    assert codes.min_distance(C) == d
    rep = codes.is_mrd(C)
    assert rep.verdict == (d == 4 - k + 1)
    assert codes.verify_mrd_witness(C, rep)


def test_gabidulin_is_mrd_on_every_route():
    C = new_code([X(LV, 0), X(LV, 1)])
    for route in ("full", "right-scaling", "subspace"):
        rep = codes.is_mrd(C, route=route)
        assert rep.verdict and rep.min_distance == 3 and rep.method == route


def test_failing_code_gives_canonical_witness_on_every_route():
    C = new_code([X(LV, 0), X(LV, 2)])
    for route in ("full", "right-scaling", "subspace"):
        rep = codes.is_mrd(C, route=route)
        assert not rep.verdict
        # least normalized codeword with a 2-dim kernel: x + x^(q^2)
        assert rep.witness == (1, 1)
        assert rep.witness_kernel_dim == 2
        assert codes.verify_mrd_witness(C, rep)


def test_guard():
    lv = tower_level(3, 1, 7)
    C = new_code([X(lv, e) for e in (0, 2, 3, 4)])
    with pytest.raises(GuardExceeded):
        codes.is_mrd(C, max_steps=1000)
    with pytest.raises(InvalidInput):
        codes.is_mrd(C, route="nope")


def test_span_machinery():
    C = new_code([X(LV, 0), X(LV, 1)])
    f = C.codeword([6, 7])
    assert C.contains(f) and f in C
    assert not C.contains(X(LV, 2))
    assert C.same_space(new_code([f, X(LV, 1)]))
    assert C.k == 2 and C.dim_fq == 8 and C.n == 4 and C.q == 2
    assert RankMetricCode.from_json(LV, C.to_json()).same_space(C)
    with pytest.raises(InvalidInput):
        new_code([X(LV, 0), X(LV, 0).scale(6)])


def ref_bilinear(f, g):
    acc = 0
    for a, b in zip(f.coeffs, g.coeffs):
        acc = REF.add(acc, REF.mul(a, b))
    tr = 0
    for i in range(4):
        tr = REF.add(tr, REF.fast_pow(acc, 2**i))
    return tr


@pytest.mark.parametrize("seed", range(6))
def test_delsarte_dual(seed):
    C = random_code(LV, 1 + seed % 3, random.Random(seed))
    D = codes.delsarte_dual(C)
    assert D.k == 4 - C.k
    for f in C.basis:
        for g in D.basis:
            for j in range(4):
                assert ref_bilinear(f.scale(LV.ctx.pow(2, j)), g) == 0
    assert codes.delsarte_dual(D).same_space(C)
    assert codes.dual_direct(C).same_space(D)


def test_dual_of_gabidulin_and_extremes():
    C = new_code([X(LV, 0), X(LV, 1)])
    assert codes.delsarte_dual(C).same_space(new_code([X(LV, 2), X(LV, 3)]))
    full = RankMetricCode.full(LV)
    assert codes.delsarte_dual(full).is_zero_code
    assert codes.delsarte_dual(RankMetricCode.zero(LV)).same_space(full)


def test_idealisers_of_gabidulin():
    C = new_code([X(LV, 0), X(LV, 1)])
    assert codes.left_idealiser(C)[0] == 4
    assert codes.right_idealiser(C)[0] == 4


@pytest.mark.parametrize("seed", range(4))
def test_transform_preserves_fingerprint(seed):
    rng = random.Random(seed)
    C = random_code(LV, 2, rng)
    g, h = random_invertible(LV, 2 * seed), random_invertible(LV, 2 * seed + 1)
    image = codes.transform(C, g, h, seed % 4)
    assert codes.fingerprint(image) == codes.fingerprint(C)


def test_transform_by_scalars_keeps_linearity():
    C = new_code([X(LV, 0), X(LV, 1)])
    image = codes.transform(C, X(LV, 0, 6), X(LV, 0, 7))
    assert image.scalars == "qn"
    assert image.same_space(C)


def test_fingerprint_values():
    fp = codes.fingerprint(new_code([X(LV, 0), X(LV, 1)]))
    assert fp["rank_distribution"] == [1, 0, 0, 225, 30]
    assert fp["min_distance"] == 3 and fp["k"] == 2


def test_exceptional_probe():
    # gcd(3, 4m) = 1 only for m = 1, 2
    probe = codes.exceptional_probe(new_code([X(LV, 0), X(LV, 3)]), 3)
    assert probe.verdicts == [True, True, False]
    assert not probe.truncated
    probe = codes.exceptional_probe(new_code([X(LV, 0), X(LV, 1)]), 5, max_field_size=2**12)
    assert probe.verdicts == [True, True, True] and probe.truncated


def test_lift_code():
    C = new_code([X(LV, 0), X(LV, 1)])
    L = codes.lift_code(C, 2)
    assert L.n == 8 and L.k == 2
    with pytest.raises(InvalidInput):
        codes.lift_code(C, 0)
