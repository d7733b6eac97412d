"""Named self-check suites run by ``moorecodes suite <name>``."""

from __future__ import annotations

import random
import time

from . import code as codes
from . import families, moore, variety
from .errors import GuardExceeded, InvalidInput
from .gf import tower_level
from .linpoly import LinPoly, random_poly

SUITES = ("paper-smoke", "oracle-equivalence", "table1", "duality")


def _case(name: str, passed: bool, **detail) -> dict:
    return {"case": name, "passed": bool(passed), **detail}


def random_code(level, k: int, rng: random.Random) -> codes.RankMetricCode:
    """A uniformly drawn k-dimensional code (rejection on dependent draws)."""
    while True:
        try:
            return codes.new_code([random_poly(level, rng) for _ in range(k)])
        except InvalidInput:
            continue


def oracle_pool(q: int = 2, n: int = 4, n_random: int = 50, seed: int = 0) -> list:
    p = q  # pools are over prime fields
    lv = tower_level(p, 1, n)
    pool = [("mono", (i, j), [LinPoly.monomial(lv, i), LinPoly.monomial(lv, j)])
            for i in range(n) for j in range(i + 1, n)]
    rng = random.Random(seed)
    for r in range(n_random):
        basis = moore._rref_top_degree(lv, random_code(lv, 2, rng).basis)
        pool.append(("random", r, basis))
    return pool


def paper_smoke() -> list[dict]:
    out = []
    lv = tower_level(2, 1, 4)
    X = LinPoly.monomial
    bad = [X(lv, 0), X(lv, 2)]
    reps = [moore.is_moore_oracle(bad), moore.is_moore(bad), variety.is_moore_variety(bad)]
    out.append(_case("example (x, x^(q^2)) fails all three tests",
                     all(not r.verdict and moore.verify_witness(bad, r.witness) for r in reps),
                     witnesses=[list(r.witness) for r in reps]))
    g = families.gabidulin(2, 4, 2, 1)
    out.append(_case("Gabidulin q=2 n=4 k=2 is MRD", codes.is_mrd(g.code).verdict))
    lv3 = families.level_for(3, 4)
    tg = families.twisted_gabidulin(3, 4, 2, 1, lv3.ctx.generator)
    out.append(_case("twisted Gabidulin q=3 n=4 delta=g is MRD", tg.valid is True and codes.is_mrd(tg.code).verdict))
    out.append(_case("index of twisted Gabidulin is s", tg.index_t == 1))
    probe = codes.exceptional_probe(codes.new_code([X(lv, 0), X(lv, 3)]), 3)
    out.append(_case("(x, x^(q^3)) q=2 n=4 fails over GF(2^12)", probe.verdicts == [True, True, False]))
    return out


def oracle_equivalence(n_random: int = 50, seed: int = 0) -> list[dict]:
    out = []
    for kind, tag, polys in oracle_pool(n_random=n_random, seed=seed):
        a = moore.is_moore_oracle(polys).verdict
        b = moore.is_moore(polys).verdict
        c = variety.is_moore_variety(polys).verdict
        out.append(_case(f"{kind} {tag}", a == b == c, oracle=a, mrd=b, variety=c))
    return out


def table1(max_steps: int | None = None) -> list[dict]:
    """Per-row verdicts at small admissible parameters."""
    out = []
    lv36 = families.level_for(3, 6)
    d3 = families.find_delta(lv36, lambda x: families.relative_norm(lv36, x, 3) == lv36.ctx.neg(1))
    d7 = families.find_delta(lv36, lambda x: lv36.ctx.add(lv36.ctx.mul(x, x), x) == 1)
    lv38 = families.level_for(3, 8)
    d13 = families.find_delta(lv38, lambda x: lv38.ctx.mul(x, x) == lv38.ctx.neg(1))
    lv34 = families.level_for(3, 4)
    cells = [
        (1, dict(q=2, n=5, k=3)),
        (2, dict(q=3, n=4, k=2, delta=lv34.ctx.generator)),
        (3, dict(q=3, t=3, delta=d3)),
        (4, dict(q=3, t=3, delta=d3)),
        (7, dict(q=3, delta=d7)),
        (8, dict(q=3, delta=d7)),
        (9, dict(q=3)),
        (10, dict(q=3)),
        (11, dict(q=4)),
        (13, dict(q=3, delta=d13)),
    ]
    for row, params in cells:
        t0 = time.perf_counter()
        spec = families.table1_row(row, **params)
        entry = {"valid": spec.valid, "params": spec.params}
        if spec.dual_check is not None:
            entry["dual_check"] = spec.dual_check
        try:
            rep = codes.is_mrd(spec.code, max_steps)
            entry.update(verdict=rep.verdict, method=rep.method)
            # rows whose conditions all hold must give MRD codes
            passed = rep.verdict if spec.valid is True else True
        except GuardExceeded as exc:
            entry.update(verdict=None, guard=str(exc))
            passed = True
        entry["seconds"] = round(time.perf_counter() - t0, 3)
        out.append(_case(f"row {row}", passed, **entry))
    return out


def duality(n_codes: int = 25, seed: int = 0) -> list[dict]:
    out = []
    lv = tower_level(2, 1, 4)
    rng = random.Random(seed)
    for r in range(n_codes):
        k = 1 + r % 3
        C = random_code(lv, k, rng)
        D = codes.delsarte_dual(C)
        involution = codes.delsarte_dual(D).same_space(C)
        direct = codes.dual_direct(C).same_space(D)
        rep = codes.is_mrd(C)
        dual_mrd = None
        ok = involution and direct
        if rep.verdict and rep.min_distance > 1:
            dual_mrd = codes.is_mrd(D).verdict
            ok = ok and dual_mrd
        out.append(_case(f"random code {r} (k={k})", ok, involution=involution, direct_agrees=direct,
                         mrd=rep.verdict, dual_mrd=dual_mrd))
    return out


def run_suite(name: str) -> dict:
    runners = {"paper-smoke": paper_smoke, "oracle-equivalence": oracle_equivalence,
               "table1": table1, "duality": duality}
    if name not in runners:
        raise InvalidInput(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cases = runners[name]()
    return {"suite": name, "passed": all(c["passed"] for c in cases), "cases": cases}
