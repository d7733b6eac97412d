"""Rank-metric codes spanned by linearized polynomials.

A code is stored through a basis over its scalar field: GF(q^N) for the usual
F_{q^N}-linear codes (``scalars="qn"``), or GF(q) for codes that are only
F_q-linear (``scalars="q"``), which arise as images under semilinear
equivalence maps.  Both kinds are also described by an F_p-spanning matrix
of flattened coefficient digits, which drives membership, equality, duals and
idealisers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fp, linalg, sweep
from .errors import DEFAULT_MAX_STEPS, GuardExceeded, InternalError, InvalidInput, check_guard
from .gf import TowerLevel, gaussian_binomial, tower_level
from .linpoly import LinPoly


class RankMetricCode:
    def __init__(self, basis, scalars: str = "qn", level: TowerLevel | None = None):
        basis = tuple(basis)
        if scalars not in ("qn", "q"):
            raise InvalidInput(f"unknown scalar field tag {scalars!r}")
        if not basis and level is None:
            raise InvalidInput("an empty basis needs an explicit field level")
        level = basis[0].level if basis else level
        for f in basis:
            if not isinstance(f, LinPoly) or f.level is not level:
                raise InvalidInput("basis polynomials live over different fields")
        self.level = level
        self.basis = basis
        self.scalars = scalars
        self._rows = None
        self._parity = None
        rank = fp.rank_mod_p(self.fp_rows(), level.p) if basis else 0
        if rank != len(basis) * self._scalar_degree():
            raise InvalidInput("basis is linearly dependent over the scalar field")
        if scalars == "qn" and len(basis) > level.N:
            raise InvalidInput(f"k = {len(basis)} exceeds n = {level.N}")

    @classmethod
    def zero(cls, level: TowerLevel) -> "RankMetricCode":
        return cls((), "qn", level=level)

    @classmethod
    def full(cls, level: TowerLevel) -> "RankMetricCode":
        return cls([LinPoly.monomial(level, i) for i in range(level.N)])

    def _scalar_degree(self) -> int:
        return self.level.E if self.scalars == "qn" else self.level.h

    @property
    def n(self) -> int:
        return self.level.N

    @property
    def q(self) -> int:
        return self.level.q

    @property
    def dim_fq(self) -> int:
        return len(self.basis) * (self.level.N if self.scalars == "qn" else 1)

    @property
    def k(self) -> int:
        """Dimension over GF(q^n); for F_q-linear codes, dim_fq / n (must divide)."""
        if self.scalars == "qn":
            return len(self.basis)
        if self.dim_fq % self.n:
            raise InvalidInput(f"F_q-dimension {self.dim_fq} is not a multiple of n = {self.n}")
        return self.dim_fq // self.n

    @property
    def is_zero_code(self) -> bool:
        return not self.basis

    def __len__(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        tag = "" if self.scalars == "qn" else ", F_q-linear"
        return f"RankMetricCode({list(self.basis)} over {self.level!r}{tag})"

    # F_p-structure
    def _scalar_mats(self) -> np.ndarray:
        lv = self.level
        return lv.ctx._xpow if self.scalars == "qn" else lv._gamma_mats

    def fp_rows(self) -> np.ndarray:
        """F_p-spanning set of the code as flattened coefficient digits (length N*E)."""
        if self._rows is None:
            lv = self.level
            if not self.basis:
                self._rows = np.zeros((0, lv.N * lv.E), dtype=np.int64)
            else:
                dig = np.stack([poly_digits(f) for f in self.basis])  # (k, N, E)
                rows = np.einsum("sab,knb->ksna", self._scalar_mats(), dig) % lv.p
                self._rows = rows.reshape(-1, lv.N * lv.E)
        return self._rows

    def parity(self) -> np.ndarray:
        """Rows spanning the F_p-annihilator: v is in the code iff parity @ v = 0."""
        if self._parity is None:
            lv = self.level
            self._parity = fp.nullspace_mod_p(self.fp_rows(), lv.p) if self.basis \
                else np.eye(lv.N * lv.E, dtype=np.int64)
        return self._parity

    def contains(self, f: LinPoly) -> bool:
        if f.level is not self.level:
            raise InvalidInput("polynomial and code live over different fields")
        v = poly_digits(f).reshape(-1)
        return not np.any(self.parity() @ v % self.level.p)

    __contains__ = contains

    def same_space(self, other: "RankMetricCode") -> bool:
        if other.level is not self.level:
            return False
        p = self.level.p
        ra = fp.rank_mod_p(self.fp_rows(), p)
        rb = fp.rank_mod_p(other.fp_rows(), p)
        if ra != rb:
            return False
        both = np.concatenate([self.fp_rows(), other.fp_rows()])
        return fp.rank_mod_p(both, p) == ra

    def codeword(self, coeffs) -> LinPoly:
        """sum b_i f_i for scalars b_i given as encodings of the scalar field."""
        lv = self.level
        if len(coeffs) != len(self.basis):
            raise InvalidInput(f"expected {len(self.basis)} coefficients")
        acc = LinPoly.zero(lv)
        for b, f in zip(coeffs, self.basis):
            b = int(b)
            if self.scalars == "q":
                b = lv.embed_base(b)
            if b:
                acc = acc + f.scale(b)
        return acc

    def to_json(self) -> dict:
        lv = self.level
        out = {"field": {"p": lv.p, "h": lv.h, "n": lv.N, "m": 1},
               "basis": [f.to_json() for f in self.basis]}
        if self.scalars == "q":
            out["scalars"] = "q"
        return out

    @classmethod
    def from_json(cls, level: TowerLevel, data: dict) -> "RankMetricCode":
        extra = set(data) - {"field", "basis", "scalars"}
        if extra:
            raise InvalidInput(f"unknown code fields: {sorted(extra)}")
        basis = [LinPoly.from_json(level, f) for f in data.get("basis", [])]
        if not basis:
            return cls.zero(level)
        return cls(basis, data.get("scalars", "qn"))


def poly_digits(f: LinPoly) -> np.ndarray:
    """(N, E) array of the coefficient digits of f."""
    return f.level.ctx.decode(np.array(f.coeffs, dtype=np.int64))


def poly_from_digits(level: TowerLevel, vec) -> LinPoly:
    vec = np.asarray(vec, dtype=np.int64).reshape(level.N, level.E)
    return LinPoly(level, [int(c) for c in level.ctx.encode(vec)])


def new_code(basis) -> RankMetricCode:
    basis = list(basis)
    if not basis:
        raise InvalidInput("a code needs a nonempty basis")
    return RankMetricCode(basis, "qn")


# -- MRD verification ---------------------------------------------------------------------

@dataclass
class MrdReport:
    verdict: bool
    min_distance: int
    witness: tuple | None = None
    witness_kernel_dim: int | None = None
    method: str = "full"
    steps: int = 0
    distance_exact: bool = True
    canonical: bool = True
    n: int = 0
    k: int = 0

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "min_distance": self.min_distance,
            "distance_exact": self.distance_exact,
            "witness": list(self.witness) if self.witness is not None else None,
            "witness_kernel_dim": self.witness_kernel_dim,
            "witness_canonical": self.canonical if self.witness is not None else None,
            "method": self.method,
            "steps": self.steps,
            "n": self.n,
            "k": self.k,
        }


def right_scaling_invariant(C: RankMetricCode) -> bool:
    """Whether C o (a x) is contained in C for every a in GF(q^n)."""
    if C.scalars != "qn" or C.is_zero_code:
        return False
    lv = C.level
    gx = LinPoly.monomial(lv, 0, lv.ctx.generator)
    return all(C.contains(f.compose(gx)) for f in C.basis)


def _vanishing_at_one(C: RankMetricCode):
    """Basis (as coefficient vectors over GF(q^n)) of the codewords with f(1) = 0."""
    ctx = C.level.ctx
    row = [f.evaluate(1) for f in C.basis]
    return linalg.nullspace(ctx, [row], len(row))


def _normalize(ctx, vec) -> tuple:
    lead = next(c for c in vec if c)
    inv = ctx.inv(lead)
    return tuple(ctx.mul(inv, c) for c in vec)


def _route_table(C: RankMetricCode, k_thr: int) -> list[tuple[str, int, int]]:
    """Candidate sweeps as (name, steps, cost estimate) for finding kernel_dim >= k_thr."""
    lv = C.level
    E = lv.E
    S = lv.ctx.order if C.scalars == "qn" else lv.q
    kk = len(C.basis)
    routes = [("full", sweep.projective_count(S, kk), sweep.projective_count(S, kk) * E**3)]
    if C.scalars == "qn":
        if right_scaling_invariant(C):
            dim1 = len(_vanishing_at_one(C))
            steps = sweep.projective_count(S, dim1) if dim1 else 0
            routes.append(("right-scaling", steps, steps * E**3))
        if k_thr <= lv.N:
            steps = gaussian_binomial(lv.N, k_thr, lv.q)
            routes.append(("subspace", steps, steps * (k_thr * E) * (kk * E) * min(k_thr, kk) * E))
    return routes


def _pick_route(C, k_thr, max_steps, forced=None):
    limit = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    routes = _route_table(C, k_thr)
    if forced is not None:
        routes = [r for r in routes if r[0] == forced]
        if not routes:
            raise InvalidInput(f"sweep route {forced!r} does not apply to this code")
    ok = [r for r in routes if r[1] <= limit]
    if not ok:
        best = min(routes, key=lambda r: r[1])
        raise GuardExceeded(f"MRD sweep ({best[0]})", best[1], limit)
    return min(ok, key=lambda r: (r[2], r[0] != "full"))


def _witness_from_subspace(C: RankMetricCode, points) -> tuple:
    """Normalized codeword vanishing on the given points."""
    ctx = C.level.ctx
    rows = [[f.evaluate(a) for f in C.basis] for a in points]
    null = linalg.nullspace(ctx, rows, len(C.basis))
    if not null:
        raise InternalError("singular subspace without a vanishing codeword")
    return _normalize(ctx, null[0])


def find_violation(C: RankMetricCode, k_thr: int, max_steps: int | None = None, route: str | None = None):
    """Some codeword with kernel_dim >= k_thr, or None.

    Returns (coeffs, kernel_dim, route, steps, canonical).  The witness is the
    lexicographically least normalized one whenever the full sweep fits the
    guard; faster routes are used to decide and the full sweep to canonicalize.
    """
    name, steps, _ = _pick_route(C, k_thr, max_steps, route)
    lv = C.level
    if name == "full":
        hit = sweep.first_violation(list(C.basis), k_thr, C.scalars)
        if hit is None:
            return None, name, steps
        return (hit.coeffs, hit.kernel_dim, True), name, hit.visited
    if name == "right-scaling":
        sub = _vanishing_at_one(C)
        if not sub:
            return None, name, 0
        polys = [C.codeword(v) for v in sub]
        hit = sweep.first_violation(polys, k_thr, "qn")
        if hit is None:
            return None, name, steps
        coeffs = [0] * len(C.basis)
        for b, v in zip(hit.coeffs, sub):
            coeffs = [lv.ctx.add(c, lv.ctx.mul(b, x)) for c, x in zip(coeffs, v)]
        coeffs = _normalize(lv.ctx, coeffs)
    else:
        pts, visited = sweep.first_singular_subspace(list(C.basis), k_thr)
        if pts is None:
            return None, name, visited
        coeffs = _witness_from_subspace(C, pts)
    full_steps = _route_table(C, k_thr)[0][1]
    limit = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    if full_steps <= limit:
        hit = sweep.first_violation(list(C.basis), k_thr, C.scalars)
        if hit is None:
            raise InternalError(f"{name} sweep found a violation the full sweep misses")
        return (hit.coeffs, hit.kernel_dim, True), name, steps
    kd = C.codeword(coeffs).kernel_dim_fp()
    if kd < k_thr:
        raise InternalError("witness codeword does not meet the kernel threshold")
    return (tuple(coeffs), kd, False), name, steps


def rank_distribution(C: RankMetricCode, max_steps: int | None = None) -> list[int]:
    """A_0..A_n: number of codewords of each rank (full enumeration)."""
    lv = C.level
    S = lv.ctx.order if C.scalars == "qn" else lv.q
    check_guard("rank distribution", sweep.projective_count(S, len(C.basis)) if C.basis else 0, max_steps)
    dist = [0] * (lv.N + 1)
    dist[0] = 1
    if C.basis:
        for kd, cnt in sweep.kernel_histogram(list(C.basis), C.scalars).items():
            dist[lv.N - kd] += cnt * (S - 1)
    return dist


def min_distance(C: RankMetricCode, max_steps: int | None = None) -> int:
    """Minimum rank of a nonzero codeword, i.e. n minus the largest kernel."""
    if C.is_zero_code:
        raise InvalidInput("the zero code has no minimum distance")
    lv = C.level
    limit = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    S = lv.ctx.order if C.scalars == "qn" else lv.q
    full = sweep.projective_count(S, len(C.basis))
    if full <= limit:
        hist = sweep.kernel_histogram(list(C.basis), C.scalars)
        return lv.N - max(hist)
    if right_scaling_invariant(C):
        sub = _vanishing_at_one(C)
        steps = sweep.projective_count(S, len(sub)) if sub else 0
        if steps <= limit:
            if not sub:
                return lv.N
            hist = sweep.kernel_histogram([C.codeword(v) for v in sub], "qn")
            return lv.N - max(hist)
    if C.scalars != "qn":
        raise GuardExceeded("minimum distance", full, limit)
    # largest j such that some codeword vanishes on a j-dim subspace
    best = 0
    for j in range(1, lv.N + 1):
        steps = gaussian_binomial(lv.N, j, lv.q)
        if steps > limit:
            raise GuardExceeded(f"minimum distance (subspaces of dim {j})", steps, limit)
        pts, _ = sweep.first_singular_subspace(list(C.basis), j)
        if pts is None:
            break
        best = j
    return lv.N - best


def is_mrd(C: RankMetricCode, max_steps: int | None = None, route: str | None = None) -> MrdReport:
    """MRD test: every nonzero codeword has kernel dimension at most k - 1.

    On failure the report carries a codeword with kernel dimension >= k and
    ``min_distance`` is only an upper bound (``distance_exact`` False) unless a
    full distance computation was cheap enough to run.
    """
    if C.is_zero_code:
        raise InvalidInput("the zero code is not an MRD candidate")
    lv = C.level
    N = lv.N
    if C.dim_fq % N:
        # F_q-dimension not a multiple of n: the Singleton bound is never met
        d = min_distance(C, max_steps)
        hit = sweep.first_violation(list(C.basis), N - d, C.scalars)
        return MrdReport(False, d, hit.coeffs, hit.kernel_dim, "full", hit.visited, True, True,
                         N, C.dim_fq // N)
    k = C.k
    found, name, steps = find_violation(C, k, max_steps, route)
    if found is None:
        return MrdReport(True, N - k + 1, None, None, name, steps, True, True, N, k)
    coeffs, kd, canonical = found
    return MrdReport(False, N - kd, tuple(int(c) for c in coeffs), kd, name, steps, False, canonical, N, k)


def verify_mrd_witness(C: RankMetricCode, report: MrdReport) -> bool:
    """Independent re-check of a failure certificate (elimination over GF(q))."""
    if report.verdict:
        return report.witness is None
    f = C.codeword(report.witness)
    return not f.is_zero() and f.kernel_dim() >= C.k and f.kernel_dim() == report.witness_kernel_dim


# -- duality -------------------------------------------------------------------------------

def _trace_matrix(level: TowerLevel) -> np.ndarray:
    acc = np.zeros((level.E, level.E), dtype=np.int64)
    for i in range(level.N):
        acc += level.frob_matrix(i)
    return acc % level.p


def bilinear(f: LinPoly, g: LinPoly) -> int:
    """Tr_{q^n/q}(sum a_i b_i) as a GF(q) encoding."""
    lv = f.level
    ctx = lv.ctx
    acc = 0
    for a, b in zip(f.coeffs, g.coeffs):
        acc = ctx.add(acc, ctx.mul(a, b))
    return lv.trace(acc)


def _dual_system(C: RankMetricCode) -> np.ndarray:
    """F_p-matrix whose null space is the dual, in flattened coefficient digits."""
    lv = C.level
    T = _trace_matrix(lv)
    blocks = []
    for row in C.fp_rows():
        coeffs = lv.ctx.encode(row.reshape(lv.N, lv.E))
        blocks.append(np.concatenate([T @ lv.ctx.mul_matrix(int(a)) for a in coeffs], axis=1) % lv.p)
    return np.concatenate(blocks) if blocks else np.zeros((0, lv.N * lv.E), dtype=np.int64)


def _greedy_basis(level: TowerLevel, candidates, scalars: str, target: int) -> list[LinPoly]:
    """Pick candidates independent over the scalar field until ``target`` are found."""
    chosen: list[LinPoly] = []
    span = np.zeros((0, level.N * level.E), dtype=np.int64)
    for f in candidates:
        if len(chosen) == target:
            break
        trial = RankMetricCode.__new__(RankMetricCode)
        trial.level, trial.basis, trial.scalars, trial._rows, trial._parity = level, (f,), scalars, None, None
        rows = trial.fp_rows()
        new = np.concatenate([span, rows])
        if fp.rank_mod_p(new, level.p) == span.shape[0] + rows.shape[0]:
            span = new
            chosen.append(f)
    return chosen


def delsarte_dual(C: RankMetricCode) -> RankMetricCode:
    """Orthogonal complement under b(f, g) = Tr(sum a_i b_i).

    The F_p-solution space of the trace conditions is computed first; a basis
    over the scalar field is then extracted greedily and the result is checked
    for closure under multiplication by the generator.
    """
    lv = C.level
    if C.is_zero_code:
        return RankMetricCode.full(lv)
    system = _dual_system(C)
    sol = fp.nullspace_mod_p(system, lv.p)
    fp_dim = lv.N * lv.E - fp.rank_mod_p(C.fp_rows(), lv.p)
    if sol.shape[0] != fp_dim:
        raise InternalError("trace form is degenerate on the coefficient space")
    if fp_dim == 0:
        return RankMetricCode.zero(lv)
    cands = [poly_from_digits(lv, v) for v in sol]
    if C.scalars == "qn":
        target = lv.N - C.k
        basis = _greedy_basis(lv, cands, "qn", target)
        if len(basis) != target:
            raise InternalError(f"extracted {len(basis)} of {target} dual basis vectors")
        G = lv.ctx.generator
        for f in basis:
            if np.any(system @ poly_digits(f.scale(G)).reshape(-1) % lv.p):
                raise InternalError("dual is not closed under GF(q^n)-scaling")
        return RankMetricCode(basis, "qn")
    basis = _greedy_basis(lv, cands, "q", fp_dim // lv.h)
    return _as_linear_as_possible(RankMetricCode(basis, "q"))


def dual_direct(C: RankMetricCode) -> RankMetricCode:
    """Dual of an F_{q^n}-linear code via sum a_i b_i = 0 over GF(q^n)."""
    lv = C.level
    if C.scalars != "qn":
        raise InvalidInput("direct dual needs an F_{q^n}-linear code")
    if C.is_zero_code:
        return RankMetricCode.full(lv)
    null = linalg.nullspace(lv.ctx, [list(f.coeffs) for f in C.basis], lv.N)
    if not null:
        return RankMetricCode.zero(lv)
    return RankMetricCode([LinPoly(lv, v) for v in null])


def _as_linear_as_possible(C: RankMetricCode) -> RankMetricCode:
    """Return an F_{q^n}-basis when the F_q-linear code happens to be F_{q^n}-linear."""
    if C.scalars == "qn" or C.is_zero_code:
        return C
    lv = C.level
    if C.dim_fq % lv.N:
        return C
    ctx = lv.ctx
    rows, piv = linalg.rref(ctx, [list(f.coeffs) for f in C.basis])
    basis = [LinPoly(lv, r) for r in rows[:len(piv)]]
    if len(basis) * lv.N != C.dim_fq:
        return C
    cand = RankMetricCode(basis, "qn")
    return cand if cand.same_space(C) else C


# -- idealisers ------------------------------------------------------------------------------

def _idealiser(C: RankMetricCode, side: str):
    lv = C.level
    if C.is_zero_code:
        raise InvalidInput("idealisers of the zero code are the whole algebra")
    H = C.parity()
    unknowns = []
    for i in range(lv.N):
        for a in range(lv.E):
            unknowns.append(LinPoly.monomial(lv, i, lv.p**a))
    spanning = [poly_from_digits(lv, r) for r in C.fp_rows()]
    blocks = []
    for f in spanning:
        cols = []
        for phi in unknowns:
            prod = phi.compose(f) if side == "left" else f.compose(phi)
            cols.append(poly_digits(prod).reshape(-1))
        blocks.append(H @ np.stack(cols, axis=1) % lv.p)
    sol = fp.nullspace_mod_p(np.concatenate(blocks), lv.p)
    if sol.shape[0] % lv.h:
        raise InternalError("idealiser F_p-dimension is not a multiple of h")
    dim = sol.shape[0] // lv.h
    basis = _greedy_basis(lv, [poly_from_digits(lv, v) for v in sol], "q", dim)
    if len(basis) != dim:
        raise InternalError("could not extract an F_q-basis of the idealiser")
    return dim, basis


def left_idealiser(C: RankMetricCode):
    """(dim over F_q, F_q-basis) of {phi : phi o f in C for all f in C}."""
    return _idealiser(C, "left")


def right_idealiser(C: RankMetricCode):
    """(dim over F_q, F_q-basis) of {phi : f o phi in C for all f in C}."""
    return _idealiser(C, "right")


# -- equivalence maps and extensions ----------------------------------------------------------

def transform(C: RankMetricCode, g: LinPoly, h: LinPoly, rho_exp: int = 0) -> RankMetricCode:
    """The code g o C^rho o h, with rho: a -> a^(p^rho_exp) on coefficients.

    A general invertible g destroys F_{q^n}-linearity, so the image is
    returned as an F_q-linear code unless it is again F_{q^n}-linear.
    """
    lv = C.level
    if g.level is not lv or h.level is not lv:
        raise InvalidInput("transform maps live over a different field")
    if not g.is_invertible() or not h.is_invertible():
        raise InvalidInput("transform maps g and h must be invertible")
    if not 0 <= rho_exp < lv.E:
        raise InvalidInput(f"rho exponent must lie in [0, {lv.E})")
    if C.is_zero_code:
        return C
    direct = [g.compose(f.apply_rho(rho_exp)).compose(h) for f in C.basis]
    if C.scalars == "qn":
        G = lv.ctx.generator
        spanning = []
        for f in C.basis:
            for j in range(lv.N):
                fj = f.scale(lv.ctx.pow(G, j))
                spanning.append(g.compose(fj.apply_rho(rho_exp)).compose(h))
    else:
        spanning = direct
    image = RankMetricCode(_greedy_basis(lv, spanning, "q", C.dim_fq), "q")
    if image.dim_fq != C.dim_fq:
        raise InternalError("transform changed the F_q-dimension")
    if C.scalars == "qn":
        try:
            cand = RankMetricCode(direct, "qn")
        except InvalidInput:
            cand = None
        if cand is not None and cand.same_space(image):
            return cand
    return _as_linear_as_possible(image)


def lift_code(C: RankMetricCode, m: int) -> RankMetricCode:
    """The GF(q^(n m))-span of C inside L_{nm,q}."""
    if m < 1:
        raise InvalidInput("extension degree m must be positive")
    if C.scalars != "qn":
        raise InvalidInput("only F_{q^n}-linear codes are lifted")
    lv = C.level
    target = tower_level(lv.p, lv.h, lv.N * m)
    if m == 1:
        return C
    return RankMetricCode([f.lift(target) for f in C.basis], "qn")


@dataclass
class ProbeResult:
    entries: list = field(default_factory=list)
    truncated: bool = False
    reason: str | None = None

    @property
    def verdicts(self) -> list[bool]:
        return [r.verdict for _, r in self.entries]

    def to_json(self) -> dict:
        return {"entries": [{"m": m, "report": r.to_json()} for m, r in self.entries],
                "truncated": self.truncated, "reason": self.reason}


def exceptional_probe(C: RankMetricCode, m_max: int, max_steps: int | None = None,
                      max_field_size: int = 2**32) -> ProbeResult:
    """is_mrd on the lifts of C to GF(q^(n m)) for m = 1..m_max.

    A false verdict at some m shows C is not MRD over that extension; all true
    verdicts are only evidence.  Levels beyond the guards truncate the list.
    """
    out = ProbeResult()
    lv = C.level
    for m in range(1, m_max + 1):
        if lv.q ** (lv.N * m) > max_field_size:
            out.truncated, out.reason = True, f"field size at m={m} exceeds {max_field_size}"
            break
        try:
            out.entries.append((m, is_mrd(lift_code(C, m), max_steps)))
        except GuardExceeded as exc:
            out.truncated, out.reason = True, f"m={m}: {exc}"
            break
    return out


def fingerprint(C: RankMetricCode, max_steps: int | None = None) -> dict:
    dist = rank_distribution(C, max_steps)
    d = next(w for w in range(1, len(dist)) if dist[w])
    return {
        "q": C.q,
        "n": C.n,
        "k": C.dim_fq // C.n if C.dim_fq % C.n == 0 else None,
        "dim_fq": C.dim_fq,
        "min_distance": d,
        "rank_distribution": dist,
        "dim_left_idealiser": left_idealiser(C)[0],
        "dim_right_idealiser": right_idealiser(C)[0],
    }
