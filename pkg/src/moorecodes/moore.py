"""Moore matrices and Moore polynomial sets.

A tuple (f_1, ..., f_k) is a Moore set when a singular matrix (f_j(a_i))
forces a_1, ..., a_k to be F_q-dependent.  Three tests are offered: a brute
force oracle over all tuples, the MRD sweep of the spanned code, and (in
:mod:`variety`) rational points of the quotient hypersurface.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import code as codes
from . import linalg, sweep
from .errors import GuardExceeded, InternalError, InvalidInput, NoMonomial, check_guard
from .gf import TowerLevel, tower_level
from .linpoly import LinPoly

FLAG_NAMES = ("monic_independent", "distinct_degrees", "distinct_mindegs_separable", "first_is_monomial",
              "monomials_above_index")


class MoorePolySet:
    def __init__(self, polys, index_t: int | None = None, assumption_flags: tuple | None = None):
        polys = tuple(polys)
        if not polys:
            raise InvalidInput("a Moore set needs at least one polynomial")
        self.code = codes.new_code(polys)  # validates independence
        self.polys = polys
        self.level: TowerLevel = polys[0].level
        if index_t is not None:
            if polys[0] != LinPoly.monomial(self.level, index_t):
                raise InvalidInput(f"index {index_t} given but f_1 is not x^(q^{index_t})")
            if any(self.code.contains(LinPoly.monomial(self.level, t)) for t in range(index_t)):
                raise InvalidInput(f"the span contains a monomial below index {index_t}")
        self.index_t = index_t
        self.assumption_flags = assumption_flags

    @property
    def k(self) -> int:
        return len(self.polys)

    @property
    def degrees(self) -> list[int]:
        return [f.qdeg for f in self.polys]

    @property
    def mindegs(self) -> list[int]:
        return [f.mindeg for f in self.polys]

    def lift(self, m: int) -> "MoorePolySet":
        target = tower_level(self.level.p, self.level.h, self.level.N * m)
        return MoorePolySet([f.lift(target) for f in self.polys])

    def __repr__(self) -> str:
        return f"MoorePolySet({list(self.polys)} over {self.level!r})"

    def to_json(self) -> dict:
        out = {"polys": [f.to_json() for f in self.polys], "index_t": self.index_t}
        if self.assumption_flags is not None:
            out["assumption_flags"] = dict(zip(FLAG_NAMES, self.assumption_flags))
        return out


def as_moore_set(obj) -> MoorePolySet:
    if isinstance(obj, MoorePolySet):
        return obj
    if isinstance(obj, codes.RankMetricCode):
        return MoorePolySet(obj.basis)
    return MoorePolySet(obj)


@dataclass
class MooreReport:
    verdict: bool
    witness: tuple | None = None
    method: str = "oracle"
    steps: int = 0
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "method": self.method,
                "witness": list(self.witness) if self.witness is not None else None,
                "steps": self.steps, **self.details}


def moore_matrix(fset, points) -> list[list[int]]:
    """k x k matrix with entry (i, j) = f_j(a_i)."""
    fset = as_moore_set(fset)
    ctx = fset.level.ctx
    points = [ctx.check(int(a)) for a in points]
    if len(points) != fset.k:
        raise InvalidInput(f"expected {fset.k} evaluation points, got {len(points)}")
    return [[f.evaluate(a) for f in fset.polys] for a in points]


def moore_det(fset, points) -> int:
    fset = as_moore_set(fset)
    return linalg.det(fset.level.ctx, moore_matrix(fset, points))


def verify_witness(fset, points) -> bool:
    """A failure certificate: singular Moore matrix at F_q-independent points."""
    fset = as_moore_set(fset)
    return moore_det(fset, points) == 0 and fset.level.fq_rank(points) == fset.k


def is_moore_oracle(fset, max_steps: int | None = None) -> MooreReport:
    """Brute force over all tuples of nonzero elements, in lexicographic order.

    Along the way every F_q-dependent tuple is confirmed to give a singular
    matrix; a counterexample to that would be an internal error.
    """
    fset = as_moore_set(fset)
    lv = fset.level
    total = (lv.ctx.order - 1) ** fset.k
    check_guard("Moore oracle", total, max_steps)
    tensor = sweep.MooreTensor(list(fset.polys))
    visited = 0
    chunk = sweep._chunk_size(fset.k * fset.k * lv.E * lv.E * 2)
    for pts in sweep.all_tuples(fset.k, lv.ctx.order, chunk, start_value=1):
        sing = tensor.singular(pts)
        full = lv.batch_fq_rank(pts) == fset.k
        if np.any(~full & ~sing):
            raise InternalError("an F_q-dependent tuple gave a nonsingular Moore matrix")
        bad = np.nonzero(sing & full)[0]
        if bad.size:
            i = int(bad[0])
            witness = tuple(int(a) for a in pts[i])
            if not verify_witness(fset, witness):
                raise InternalError("oracle witness failed re-verification")
            return MooreReport(False, witness, "oracle", visited + i + 1)
        visited += len(pts)
    return MooreReport(True, None, "oracle", visited)


def kernel_witness(f: LinPoly, k: int) -> tuple:
    """k F_q-independent elements of ker f, picked greedily from an F_p-basis."""
    lv = f.level
    chosen: list[int] = []
    for a in f.kernel():
        if lv.fq_rank(chosen + [a]) == len(chosen) + 1:
            chosen.append(a)
        if len(chosen) == k:
            return tuple(chosen)
    raise InternalError(f"kernel of {f!r} has F_q-dimension below {k}")


def is_moore(fset, max_steps: int | None = None) -> MooreReport:
    """Moore test through the MRD sweep of the spanned code.

    A violating codeword sum b_j f_j with kernel dimension >= k gives k
    independent kernel elements; at those points the columns of the Moore
    matrix are dependent with coefficients b_j.
    """
    fset = as_moore_set(fset)
    rep = codes.is_mrd(fset.code, max_steps)
    details = {"mrd": rep.to_json()}
    if rep.verdict:
        return MooreReport(True, None, "mrd", rep.steps, details)
    witness = kernel_witness(fset.code.codeword(rep.witness), fset.k)
    if not verify_witness(fset, witness):
        raise InternalError("converted MRD witness failed re-verification")
    return MooreReport(False, witness, "mrd", rep.steps, details)


def index_of(C) -> int:
    """Least t with x^(q^t) in the code."""
    if isinstance(C, MoorePolySet):
        C = C.code
    for t in range(C.n):
        if C.contains(LinPoly.monomial(C.level, t)):
            return t
    raise NoMonomial("the code contains no monomial x^(q^t)")


def _rref_top_degree(level: TowerLevel, polys) -> list[LinPoly]:
    """Basis with distinct, monic leading terms and zeros above/below each leading term."""
    rows = [list(reversed(f.coeffs)) for f in polys]
    red, piv = linalg.rref(level.ctx, rows)
    return [LinPoly(level, list(reversed(r))) for r in red[:len(piv)]]


def assumption_flags(polys, t: int | None) -> tuple:
    level = polys[0].level
    try:
        codes.new_code(polys)
        independent = True
    except InvalidInput:
        independent = False
    c1 = independent and all(f.is_monic() for f in polys)
    M = [f.qdeg for f in polys]
    m = [f.mindeg for f in polys]
    c2 = len(set(M)) == len(M)
    c3 = len(set(m)) == len(m) and 0 in m
    c4 = t is not None and polys[0] == LinPoly.monomial(level, t)
    c5 = all(mi == Mi and (t is None or Mi >= t) for f, mi, Mi in zip(polys, m, M) if f.is_monomial)
    return (c1, c2, c3, c4, c5)


def normalize(C) -> MoorePolySet:
    """Change basis towards the normal form used for index-t Moore sets.

    Echelonize by q-degree (distinct monic leading terms), put x^(q^t) first
    when the code has an index, then remove clashes of minimal degrees by
    subtracting multiples of the polynomial with the smaller q-degree.  The
    flags report which conditions the result actually satisfies.
    """
    if isinstance(C, MoorePolySet):
        C = C.code
    lv = C.level
    ctx = lv.ctx
    polys = _rref_top_degree(lv, C.basis)
    try:
        t = index_of(C)
    except NoMonomial:
        t = None
    if t is not None:
        mono = LinPoly.monomial(lv, t)
        polys = [mono] + [f for f in polys if f.qdeg != t]
    while True:
        clash = None
        for i in range(len(polys)):
            for j in range(len(polys)):
                if i != j and polys[i].mindeg == polys[j].mindeg and polys[i].qdeg > polys[j].qdeg:
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            break
        i, j = clash
        m = polys[i].mindeg
        c = ctx.div(polys[i].coeffs[m], polys[j].coeffs[m])
        polys[i] = polys[i] - polys[j].scale(c)
    first = polys[:1] if t is not None else []
    rest = sorted(polys[1:] if t is not None else polys, key=lambda f: f.qdeg)
    polys = first + rest
    flags = assumption_flags(polys, t)
    out = MoorePolySet(polys, index_t=t if flags[3] else None, assumption_flags=flags)
    if not out.code.same_space(C):
        raise InternalError("normalization changed the spanned code")
    return out


def is_ap(exponents, allow_permutation: bool = False) -> bool:
    """Whether the integers form an arithmetic progression (optionally after sorting)."""
    ex = [int(e) for e in exponents]
    if not ex:
        raise InvalidInput("empty exponent list")
    if len(set(ex)) != len(ex):
        raise InvalidInput("exponents must be distinct")
    if allow_permutation:
        ex = sorted(ex)
    if len(ex) <= 2:
        return True
    d = ex[1] - ex[0]
    return all(b - a == d for a, b in zip(ex, ex[1:]))


@dataclass
class MooreProbe:
    entries: list = field(default_factory=list)
    truncated: bool = False
    reason: str | None = None

    @property
    def verdicts(self) -> list[bool]:
        return [r.verdict for _, r in self.entries]

    def to_json(self) -> dict:
        return {"entries": [{"m": m, "report": r.to_json()} for m, r in self.entries],
                "truncated": self.truncated, "reason": self.reason}


def exceptional_moore_probe(fset, m_max: int, max_steps: int | None = None,
                            max_field_size: int = 2**32) -> MooreProbe:
    fset = as_moore_set(fset)
    lv = fset.level
    out = MooreProbe()
    for m in range(1, m_max + 1):
        if lv.q ** (lv.N * m) > max_field_size:
            out.truncated, out.reason = True, f"field size at m={m} exceeds {max_field_size}"
            break
        try:
            out.entries.append((m, is_moore(fset.lift(m), max_steps)))
        except GuardExceeded as exc:
            out.truncated, out.reason = True, f"m={m}: {exc}"
            break
    return out


def is_scattered(f: LinPoly, t: int = 0, max_steps: int | None = None) -> MooreReport:
    """f is scattered of index t iff (x^(q^t), f) is a Moore set."""
    return is_moore(MoorePolySet([LinPoly.monomial(f.level, t), f]), max_steps)
