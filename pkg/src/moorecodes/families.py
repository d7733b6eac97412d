"""Known MRD families and Moore polynomial sets.

Each constructor returns a :class:`FamilySpec`: the polynomials exactly as
written in the family's formula, the spanned code, and a validity report
whose entries are True, False or ``UNVERIFIABLE`` when a side condition is
not decidable from the formula alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import code as codes
from .errors import InvalidInput
from .gf import TowerLevel, prime_power, tower_level
from .linpoly import LinPoly

UNVERIFIABLE = "unverifiable-condition"
DUAL_ROWS = {4: 3, 6: 5, 8: 7, 10: 9, 12: 11, 14: 13}


@dataclass
class FamilySpec:
    family_id: str
    params: dict
    polys: tuple
    validity: list = field(default_factory=list)
    index_t: int | None = None
    dual_check: dict | None = None

    @property
    def level(self) -> TowerLevel:
        return self.polys[0].level

    @property
    def code(self) -> codes.RankMetricCode:
        return codes.new_code(self.polys)

    @property
    def valid(self) -> bool | str:
        vals = [v for _, v in self.validity]
        if any(v is False for v in vals):
            return False
        if any(v == UNVERIFIABLE for v in vals):
            return UNVERIFIABLE
        return True

    def to_json(self) -> dict:
        out = {"family": self.family_id, "params": self.params,
               "polys": [f.to_json() for f in self.polys],
               "validity": [{"condition": c, "holds": v} for c, v in self.validity],
               "valid": self.valid, "index_t": self.index_t}
        if self.dual_check is not None:
            out["dual_check"] = self.dual_check
        return out


def level_for(q: int, n: int) -> TowerLevel:
    p, h = prime_power(q)
    if n < 1:
        raise InvalidInput("n must be positive")
    return tower_level(p, h, n)


def _mono(level: TowerLevel, e: int, c: int = 1) -> LinPoly:
    return LinPoly.monomial(level, e % level.N, c)


def _sum(*polys: LinPoly) -> LinPoly:
    acc = polys[0]
    for f in polys[1:]:
        acc = acc + f
    return acc


def _minus_one_q(level: TowerLevel, e: int) -> int:
    """(-1)^e as a GF(q) encoding."""
    return level.base.neg(1) if e % 2 else 1


def _check_delta(level: TowerLevel, delta) -> int:
    if delta is None:
        raise InvalidInput("this family needs a value for delta")
    delta = level.ctx.check(int(delta))
    if delta == 0:
        raise InvalidInput("delta must be nonzero")
    return delta


def relative_norm(level: TowerLevel, x: int, d: int) -> int:
    """N_{q^N / q^d}(x) = x^(1 + q^d + ... + q^(N-d)), as an element of the level field."""
    if level.N % d:
        raise InvalidInput(f"{d} does not divide {level.N}")
    acc = 1
    for i in range(0, level.N, d):
        acc = level.ctx.mul(acc, level.frob(x, i))
    return acc


def find_delta(level: TowerLevel, predicate) -> int:
    """Least nonzero encoding satisfying ``predicate``."""
    for x in range(1, level.ctx.order):
        if predicate(x):
            return x
    raise InvalidInput("no element satisfies the requested condition")


# -- families with parameters (q, n, k, s) ----------------------------------------------------

def gabidulin(q: int, n: int, k: int, s: int = 1) -> FamilySpec:
    lv = level_for(q, n)
    if not 1 <= k <= n:
        raise InvalidInput("need 1 <= k <= n")
    exps = [(s * i) % n for i in range(k)]
    if len(set(exps)) != k:
        raise InvalidInput(f"exponents s*i mod n repeat for s={s}, n={n}")
    polys = tuple(_mono(lv, e) for e in exps)
    return FamilySpec("G", {"q": q, "n": n, "k": k, "s": s}, polys,
                      [("gcd(s,n)=1", gcd(s, n) == 1)], index_t=0)


def twisted_gabidulin(q: int, n: int, k: int, s: int, delta: int) -> FamilySpec:
    lv = level_for(q, n)
    delta = _check_delta(lv, delta)
    if not 1 <= k < n:
        raise InvalidInput("need 1 <= k < n")
    exps = [(s * i) % n for i in range(1, k)]
    polys = [_mono(lv, e) for e in exps] + [_mono(lv, 0) + _mono(lv, s * k, delta)]
    try:
        codes.new_code(polys)
    except InvalidInput as exc:
        raise InvalidInput(f"twisted Gabidulin basis degenerates: {exc}") from None
    norm = lv.norm(delta)
    validity = [("gcd(s,n)=1", gcd(s, n) == 1),
                ("N(delta) != (-1)^(nk)", norm != _minus_one_q(lv, n * k))]
    spec = FamilySpec("T", {"q": q, "n": n, "k": k, "s": s, "delta": delta}, tuple(polys), validity)
    if k > 1:
        from .moore import index_of
        spec.index_t = index_of(spec.code)
    return spec


def pseudoregulus(q: int, n: int, s: int) -> FamilySpec:
    """x^(q^s), scattered of index 0 when gcd(s, n) = 1; the pair is (x, x^(q^s))."""
    lv = level_for(q, n)
    if not 0 < s < n:
        raise InvalidInput(f"s must lie in (0, {n})")
    return FamilySpec("Ps", {"q": q, "n": n, "s": s}, (_mono(lv, 0), _mono(lv, s)),
                      [("gcd(s,n)=1", gcd(s, n) == 1)], index_t=0)


def lp_poly(q: int, n: int, s: int, delta: int) -> FamilySpec:
    """x + delta x^(q^(2s)) of index s; the pair is (x^(q^s), x + delta x^(q^(2s)))."""
    lv = level_for(q, n)
    delta = _check_delta(lv, delta)
    if not 0 < s < n or (2 * s) % n == 0:
        raise InvalidInput(f"s={s} is out of range for n={n}")
    f = _mono(lv, 0) + _mono(lv, 2 * s, delta)
    validity = [("gcd(s,n)=1", gcd(s, n) == 1), ("N(delta) != 1", lv.norm(delta) != 1)]
    return FamilySpec("LP", {"q": q, "n": n, "s": s, "delta": delta}, (_mono(lv, s), f), validity, index_t=s)


def scattered_poly(spec: FamilySpec) -> LinPoly:
    """The second polynomial of a (Ps) or (LP) pair."""
    return spec.polys[1]


# -- Table 1 --------------------------------------------------------------------------------

def _row3_coeffs(lv: TowerLevel, t: int, delta: int) -> tuple[int, int]:
    ctx = lv.ctx
    a = ctx.pow(delta, lv.q**t + 1)
    b = ctx.div(delta, lv.frob(delta, 2 * t - 1))
    return a, b


def _odd(q: int) -> bool:
    return q % 2 == 1


def table1_row(row: int, q: int, s: int = 1, t: int | None = None, delta: int | None = None,
               k: int | None = None, n: int | None = None, check_dual: bool = True) -> FamilySpec:
    """Row ``row`` of the table of known Moore sets, exactly as printed.

    Rows 1 and 2 are the Gabidulin and twisted Gabidulin families (they need
    ``n`` and ``k``).  For the dual rows the literal Delsarte dual of the
    preceding row is compared with the printed basis (``dual_check``).
    """
    if row == 1:
        if n is None or k is None:
            raise InvalidInput("row 1 needs n and k")
        return gabidulin(q, n, k, s)
    if row == 2:
        if n is None or k is None:
            raise InvalidInput("row 2 needs n and k")
        return twisted_gabidulin(q, n, k, s, delta)
    params = {"row": row, "q": q, "s": s}
    if row in (3, 4):
        if t is None or t < 3:
            raise InvalidInput("rows 3 and 4 need t >= 3 (t = 2 collapses exponents)")
        n = 2 * t
        lv = level_for(q, n)
        delta = _check_delta(lv, delta)
        a, b = _row3_coeffs(lv, t, delta)
        validity = [("q odd", _odd(q)),
                    ("N_{q^2t/q^t}(delta) = -1", relative_norm(lv, delta, t) == lv.ctx.neg(1)),
                    ("gcd(s,n)=1", gcd(s, n) == 1)]
        params.update({"t": t, "n": n, "delta": delta})
        if row == 3:
            f = _sum(_mono(lv, s), _mono(lv, s * (t - 1)), _mono(lv, s * (t + 1), a), _mono(lv, s * (2 * t - 1), b))
            polys = (_mono(lv, 0), f)
        else:
            skip = {0, 1, t - 1, t + 1, 2 * t - 1}
            polys = tuple(_mono(lv, s * i) for i in range(n) if i not in skip) + (
                _mono(lv, s) - _mono(lv, s * (t - 1)),
                _mono(lv, s, a) - _mono(lv, s * (t + 1)),
                _mono(lv, s, b) - _mono(lv, s * (2 * t - 1)),
            )
    elif row in (5, 6):
        lv = level_for(q, 6)
        delta = _check_delta(lv, delta)
        validity = [("q > 4", q > 4), ("choice of delta", UNVERIFIABLE)]
        if row == 5:
            polys = (_mono(lv, 0), _mono(lv, 1) + _mono(lv, 4, delta))
        else:
            polys = (_mono(lv, 1), _mono(lv, 2), _mono(lv, 4), _mono(lv, 0) - _mono(lv, 3, lv.frob(delta, 5)))
    elif row in (7, 8):
        lv = level_for(q, 6)
        delta = _check_delta(lv, delta)
        ctx = lv.ctx
        validity = [("q odd", _odd(q)), ("delta^2 + delta = 1", ctx.add(ctx.mul(delta, delta), delta) == 1)]
        if row == 7:
            polys = (_mono(lv, 0), _sum(_mono(lv, 1), _mono(lv, 3), _mono(lv, 5, delta)))
        else:
            polys = (_mono(lv, 1), _mono(lv, 3), _mono(lv, 0) - _mono(lv, 2), _mono(lv, 4) - _mono(lv, 0, delta))
    elif row in (9, 10):
        lv = level_for(q, 7)
        validity = [("q odd", _odd(q)), ("gcd(s,7)=1", gcd(s, 7) == 1)]
        exps = (0, s, 3 * s) if row == 9 else (0, 2 * s, 3 * s, 4 * s)
        polys = tuple(_mono(lv, e) for e in exps)
    elif row in (11, 12):
        lv = level_for(q, 8)
        validity = [("q = 1 mod 3", q % 3 == 1), ("gcd(s,8)=1", gcd(s, 8) == 1)]
        exps = (0, s, 3 * s) if row == 11 else (0, 2 * s, 3 * s, 4 * s, 5 * s)
        polys = tuple(_mono(lv, e) for e in exps)
    elif row in (13, 14):
        lv = level_for(q, 8)
        delta = _check_delta(lv, delta)
        ctx = lv.ctx
        validity = [("q odd", _odd(q)), ("delta^2 = -1", ctx.mul(delta, delta) == ctx.neg(1))]
        if row == 13:
            polys = (_mono(lv, 0), _mono(lv, 1) + _mono(lv, 5, delta))
        else:
            polys = tuple(_mono(lv, e) for e in (1, 2, 3, 5, 6)) + (_mono(lv, 0) - _mono(lv, 4, delta),)
    else:
        raise InvalidInput(f"unknown table row {row}")
    if delta is not None:
        params["delta"] = delta
    spec = FamilySpec(f"Table1.row{row}", params, tuple(polys), validity)
    spec.code  # independence check
    if row in DUAL_ROWS and check_dual:
        primal = table1_row(DUAL_ROWS[row], q, s=s, t=t, delta=delta, check_dual=False)
        spec.dual_check = compare_dual(primal.code, spec.code)
    return spec


def adjoint(f: LinPoly) -> LinPoly:
    """The adjoint sum a_i^(q^(n-i)) x^(q^(n-i)) with respect to Tr(x y)."""
    lv = f.level
    out = [0] * lv.N
    for i, a in f.terms():
        out[(-i) % lv.N] = lv.frob(a, -i)
    return LinPoly(lv, out)


def compare_dual(primal: codes.RankMetricCode, printed: codes.RankMetricCode) -> dict:
    """Compare a printed dual basis with the literal Delsarte dual of ``primal``.

    Besides plain equality, looks for an explicit equivalence
    x^(q^a) o D' o x^(q^b) with D' the dual or its adjoint code.
    """
    lv = primal.level
    dual = codes.delsarte_dual(primal)
    out = {"dual_dim": len(dual.basis), "printed_dim": len(printed.basis),
           "span_equal": dual.same_space(printed), "equivalence": None}
    if out["span_equal"]:
        out["equivalence"] = {"adjoint": False, "left_shift": 0, "right_shift": 0}
        return out
    for use_adj in (False, True):
        base = [adjoint(f) for f in dual.basis] if use_adj else list(dual.basis)
        for a in range(lv.N):
            for b in range(lv.N):
                polys = [_mono(lv, a).compose(f).compose(_mono(lv, b)) for f in base]
                if codes.new_code(polys).same_space(printed):
                    out["equivalence"] = {"adjoint": use_adj, "left_shift": a, "right_shift": b}
                    return out
    return out
