"""Command-line prover: JSON requests in, JSON responses with re-checked certificates out.

Every subcommand reads a JSON payload (``--json``, ``--in FILE``/``--in -``, or
piped stdin) and merges in any payload keys given as flags.  The response is

    {"status": ..., "command": ..., "result": ..., "certificate": ..., "timing_ms": ...}

written with sorted keys.  Exit codes: 0 ok, 2 property false (with a
certificate), 3 guard exceeded, 4 invalid input, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import code as codes
from . import families, moore, suites, variety
from .errors import GuardExceeded, InternalError, InvalidInput, NoMonomial
from .gf import FieldCtx, TowerLevel, tower_from_spec
from .linpoly import LinPoly, random_invertible
from .mvpoly import MvPoly

EXIT_OK, EXIT_INTERNAL, EXIT_FALSE, EXIT_GUARD, EXIT_INVALID = 0, 1, 2, 3, 4

_POWER = re.compile(r"^\s*g\s*\^\s*(-?\d+)\s*$")
_INT = re.compile(r"^\s*\d+\s*$")


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; route that to 'invalid' instead."""

    def error(self, message):
        raise InvalidInput(message)


# -- element and payload parsing ----------------------------------------------------------

def parse_element(s, ctx: FieldCtx) -> int:
    """A base-10 encoding in [0, p^e) or the symbolic power "g^k" of the field generator."""
    if isinstance(s, bool):
        raise InvalidInput(f"malformed field element {s!r}")
    if isinstance(s, int):
        return ctx.check(s)
    if not isinstance(s, str):
        raise InvalidInput(f"malformed field element {s!r}")
    m = _POWER.match(s)
    if m:
        k = int(m.group(1))
        g = ctx.generator
        if k < 0:
            g, k = ctx.inv(g), -k
        return ctx.pow(g, k)
    if _INT.match(s):
        return ctx.check(int(s))
    raise InvalidInput(f"malformed field element {s!r}")


def _poly(level: TowerLevel, data) -> LinPoly:
    """{'coeffs': [...]}, {'terms': [[i, c], ...]} or a bare [[i, c], ...] term list."""
    ctx = level.ctx
    if isinstance(data, list):
        data = {"terms": data}
    if not isinstance(data, dict):
        raise InvalidInput(f"malformed linearized polynomial {data!r}")
    if set(data) == {"coeffs"}:
        coeffs = [parse_element(c, ctx) for c in data["coeffs"]]
        if len(coeffs) > level.N:
            raise InvalidInput(f"{len(coeffs)} coefficients for q-degree below {level.N}")
        return LinPoly(level, coeffs + [0] * (level.N - len(coeffs)))
    if set(data) == {"terms"}:
        try:
            terms = [(int(i), parse_element(c, ctx)) for i, c in data["terms"]]
        except (TypeError, ValueError):
            raise InvalidInput(f"malformed term list {data['terms']!r}") from None
        return LinPoly.from_terms(level, terms)
    raise InvalidInput("a linearized polynomial is {'coeffs': [...]} or {'terms': [[i, c], ...]}")


def _elements(level: TowerLevel, values, name: str) -> list[int]:
    if not isinstance(values, list):
        raise InvalidInput(f"{name} must be a list of field elements")
    return [parse_element(v, level.ctx) for v in values]


class Request:
    """A validated payload bound to its field."""

    def __init__(self, command: str, payload: dict, allowed: set, max_steps, seed):
        unknown = set(payload) - allowed
        if unknown:
            raise InvalidInput(f"unknown fields for {command}: {sorted(unknown)}")
        self.command = command
        self.payload = payload
        self.max_steps = max_steps
        self.seed = seed
        self._level = None

    def get(self, key, default=None):
        return self.payload.get(key, default)

    def need(self, key):
        if key not in self.payload:
            raise InvalidInput(f"{self.command} needs '{key}'")
        return self.payload[key]

    @property
    def level(self) -> TowerLevel:
        if self._level is None:
            spec = self.payload.get("field")
            code = self.payload.get("code")
            if spec is None and isinstance(code, dict):
                spec = code.get("field")
            if not isinstance(spec, dict):
                raise InvalidInput("missing or malformed field spec")
            tower = tower_from_spec(spec)
            self._level = tower.mid
        return self._level

    def poly(self, key: str) -> LinPoly:
        return _poly(self.level, self.need(key))

    def polys(self) -> list[LinPoly]:
        if "polys" in self.payload:
            data = self.payload["polys"]
        elif isinstance(self.payload.get("code"), dict):
            code = self.payload["code"]
            extra = set(code) - {"field", "basis", "scalars"}
            if extra:
                raise InvalidInput(f"unknown code fields: {sorted(extra)}")
            data = code.get("basis", [])
        else:
            raise InvalidInput(f"{self.command} needs 'polys' or 'code'")
        if not isinstance(data, list):
            raise InvalidInput("polys must be a list")
        return [_poly(self.level, f) for f in data]

    def code(self) -> codes.RankMetricCode:
        polys = self.polys()
        scalars = self.payload.get("code", {}).get("scalars", "qn") if isinstance(self.payload.get("code"), dict) else "qn"
        if not polys:
            return codes.RankMetricCode.zero(self.level)
        return codes.RankMetricCode(polys, scalars)

    def moore_set(self) -> moore.MoorePolySet:
        return moore.MoorePolySet(self.polys())


# -- certificate checks (independent of the routines that produced them) ---------------------

def _check_mrd_certificate(C: codes.RankMetricCode, rep: codes.MrdReport) -> dict:
    f = C.codeword(rep.witness)
    kd = f.kernel_dim_fp()
    if f.is_zero() or kd < rep.k or not codes.verify_mrd_witness(C, rep):
        raise InternalError("MRD certificate failed re-verification")
    return {"codeword": list(rep.witness), "poly": f.to_json(), "kernel_dim": kd}


def _check_moore_certificate(fset: moore.MoorePolySet, witness) -> dict:
    lv = fset.level
    mat = moore.moore_matrix(fset, witness)
    det = moore.moore_det(fset, witness)
    rank = lv.fq_rank(list(witness))
    if det != 0 or rank != fset.k:
        raise InternalError("Moore certificate failed re-verification")
    return {"points": list(witness), "moore_matrix": mat, "det": det, "fq_rank": rank}


def _check_variety_point(W: MvPoly, fset: moore.MoorePolySet, point) -> dict:
    cert = _check_moore_certificate(fset, point)
    if W.evaluate(point) != 0:
        raise InternalError("variety certificate is not a point of W")
    cert["W_value"] = 0
    return cert


# -- command handlers -----------------------------------------------------------------------
# Each returns (result, certificate); a non-None certificate means "property false".

def cmd_field_info(req: Request):
    lv = req.level
    ctx = lv.ctx
    out = {"p": lv.p, "h": lv.h, "q": lv.q, "n": lv.N, "order": ctx.order,
           "defining_poly": list(ctx.modulus), "base_defining_poly": list(lv.base.modulus),
           "generator": ctx.generator, "primitive": ctx.primitive,
           "tower": tower_from_spec(req.need("field")).spec()}
    if "elements" in req.payload:
        out["elements"] = [{"value": a, "digits": ctx.digits(a), "trace": lv.trace(a), "norm": lv.norm(a)}
                           for a in _elements(lv, req.payload["elements"], "elements")]
    return out, None


def cmd_eval(req: Request):
    f = req.poly("poly")
    pts = _elements(req.level, req.need("points"), "points")
    return {"poly": f.to_json(), "values": [f.evaluate(a) for a in pts]}, None


def cmd_compose(req: Request):
    f, g = req.poly("f"), req.poly("g")
    return {"poly": f.compose(g).to_json()}, None


def cmd_is_mrd(req: Request):
    C = req.code()
    rep = codes.is_mrd(C, req.max_steps, req.get("route"))
    cert = None if rep.verdict else _check_mrd_certificate(C, rep)
    return rep.to_json(), cert


def cmd_min_distance(req: Request):
    C = req.code()
    return {"min_distance": codes.min_distance(C, req.max_steps), "n": C.n, "dim_fq": C.dim_fq}, None


def cmd_dual(req: Request):
    C = req.code()
    D = codes.delsarte_dual(C)
    if req.get("check_direct", False) and not codes.dual_direct(C).same_space(D):
        raise InternalError("the two dual computations disagree")
    return D.to_json(), None


def cmd_idealisers(req: Request):
    C = req.code()
    dl, bl = codes.left_idealiser(C)
    dr, br = codes.right_idealiser(C)
    return {"left": {"dim_fq": dl, "basis": [f.to_json() for f in bl]},
            "right": {"dim_fq": dr, "basis": [f.to_json() for f in br]}}, None


def cmd_transform(req: Request):
    C = req.code()
    lv = C.level
    seed = 0 if req.seed is None else req.seed
    g = req.poly("g") if "g" in req.payload else random_invertible(lv, seed)
    h = req.poly("h") if "h" in req.payload else random_invertible(lv, seed + 1)
    rho = int(req.get("rho", 0))
    image = codes.transform(C, g, h, rho)
    return {"code": image.to_json(), "g": g.to_json(), "h": h.to_json(), "rho": rho}, None


def cmd_lift(req: Request):
    C = req.code()
    m = int(req.need("m"))
    return codes.lift_code(C, m).to_json(), None


def cmd_exceptional_probe(req: Request):
    C = req.code()
    probe = codes.exceptional_probe(C, int(req.need("m_max")), req.max_steps)
    cert = None
    for m, rep in probe.entries:
        if not rep.verdict:
            cert = {"m": m, **_check_mrd_certificate(codes.lift_code(C, m), rep)}
            break
    out = probe.to_json()
    out["verdicts"] = probe.verdicts
    return out, cert


def cmd_moore_det(req: Request):
    fset = req.moore_set()
    pts = _elements(req.level, req.need("points"), "points")
    return {"matrix": moore.moore_matrix(fset, pts), "det": moore.moore_det(fset, pts),
            "fq_rank": req.level.fq_rank(pts)}, None


def cmd_is_moore(req: Request):
    fset = req.moore_set()
    method = req.get("method", "mrd")
    runners = {"oracle": moore.is_moore_oracle, "mrd": moore.is_moore, "variety": variety.is_moore_variety}
    if method == "all":
        reps = {name: run(fset, req.max_steps) for name, run in runners.items()}
    elif method in runners:
        reps = {method: runners[method](fset, req.max_steps)}
    else:
        raise InvalidInput(f"unknown method {method!r}")
    verdicts = {name: r.verdict for name, r in reps.items()}
    if len(set(verdicts.values())) != 1:
        raise InternalError(f"Moore tests disagree: {verdicts}")
    verdict = next(iter(verdicts.values()))
    result = {"verdict": verdict, "method": method, "reports": {n: r.to_json() for n, r in reps.items()}}
    cert = None
    if not verdict:
        certs = {name: _check_moore_certificate(fset, r.witness) for name, r in reps.items()}
        cert = certs[method] if method != "all" else certs
    return result, cert


def cmd_index(req: Request):
    C = req.code()
    try:
        return {"index": moore.index_of(C)}, None
    except NoMonomial:
        return {"index": None}, None


def cmd_normalize(req: Request):
    return moore.normalize(req.code()).to_json(), None


def cmd_is_ap(req: Request):
    ex = req.need("exponents")
    if not isinstance(ex, list):
        raise InvalidInput("exponents must be a list")
    return {"verdict": moore.is_ap(ex, bool(req.get("allow_permutation", False)))}, None


def _curve(req: Request):
    fset = req.moore_set()
    lambdas = _elements(req.level, req.get("lambdas", []), "lambdas")
    if fset.k == 2 and not lambdas:
        return fset, variety.build_F(fset)
    return fset, variety.specialize_curve(fset, lambdas)


def cmd_variety(req: Request):
    action = req.need("action")
    if action == "build":
        fset = req.moore_set()
        F = variety.build_F(fset)
        V = variety.build_V(fset.level, fset.k, req.max_steps)
        return {"F": F.to_json(), "V": V.to_json(), "deg_F": F.degree(), "deg_V": V.degree()}, None
    if action == "divide":
        fset = req.moore_set()
        W = variety.build_W(fset)
        return {"W": W.to_json(), "deg_W": W.degree()}, None
    if action == "points":
        fset = req.moore_set()
        W = variety.build_W(fset)
        pts = variety.points_off_V(W, fset, req.max_steps, first_only=bool(req.get("first_only", False)))
        cert = {"points": [_check_variety_point(W, fset, P) for P in pts[:16]],
                "count": len(pts)} if pts else None
        return {"points_off_V": [list(P) for P in pts], "verdict": not pts}, cert
    if action in ("infinity", "singular"):
        fset, H = _curve(req)
        if H.is_zero():
            lambdas = _elements(req.level, req.get("lambdas", []), "lambdas")
            w = variety.zero_curve_witness(fset, lambdas)
            return {"curve": [], "identically_zero": True}, _check_moore_certificate(fset, w)
    if action == "infinity":
        return {"curve": H.to_json(), "degree": H.degree(),
                "points": [list(P) for P in variety.points_at_infinity(H)]}, None
    if action == "singular":
        pts = variety.singular_points_affine(H, req.max_steps)
        out = []
        for P in pts:
            m, Fm, Fm1 = variety.translate_lowest_form(H, P)
            out.append({"point": list(P), "multiplicity": m, "tangent_cone": Fm.to_json(),
                        "next_form": Fm1.to_json()})
        return {"curve": H.to_json(), "singular_points": out}, None
    raise InvalidInput(f"unknown variety action {action!r}")


_FAMILIES = {"G": "gabidulin", "gabidulin": "gabidulin", "T": "twisted", "twisted": "twisted",
             "Ps": "pseudoregulus", "pseudoregulus": "pseudoregulus", "LP": "lp", "lp": "lp"}


def _family_n(fid_row: int | None, req: Request) -> int | None:
    """Extension degree of a family instance, needed to decode a symbolic delta."""
    if fid_row in (3, 4):
        return 2 * int(req.need("t"))
    for rows, n in (((5, 6, 7, 8), 6), ((9, 10), 7), ((11, 12, 13, 14), 8)):
        if fid_row in rows:
            return n
    return int(req.get("n")) if req.get("n") is not None else None


def _int_param(req: Request, key: str, default=None):
    v = req.get(key, default)
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InvalidInput(f"{key} must be an integer")
    return int(v)


def cmd_family(req: Request):
    fid = str(req.need("id"))
    kind = _FAMILIES.get(fid)
    row = None
    if kind is None:
        m = re.fullmatch(r"(?:row)?(\d+)", fid)
        if not m:
            raise InvalidInput(f"unknown family {fid!r}")
        row = int(m.group(1))
    q = _int_param(req, "q")
    if q is None:
        raise InvalidInput("family needs 'q'")
    n, k, s, t = (_int_param(req, key) for key in ("n", "k", "s", "t"))
    s = 1 if s is None else s
    delta = req.get("delta")
    if delta is not None:
        dn = _family_n(row, req)
        if dn is None:
            raise InvalidInput("delta needs the extension degree n")
        delta = parse_element(delta, families.level_for(q, dn).ctx)
    if kind in ("gabidulin", "twisted", "pseudoregulus", "lp") and n is None:
        raise InvalidInput(f"family {fid} needs 'n'")
    if kind in ("gabidulin", "twisted") and k is None:
        raise InvalidInput(f"family {fid} needs 'k'")
    if kind == "gabidulin":
        spec = families.gabidulin(q, n, k, s)
    elif kind == "twisted":
        spec = families.twisted_gabidulin(q, n, k, s, delta)
    elif kind == "pseudoregulus":
        spec = families.pseudoregulus(q, n, s)
    elif kind == "lp":
        spec = families.lp_poly(q, n, s, delta)
    else:
        spec = families.table1_row(row, q, s=s, t=t, delta=delta, k=k, n=n)
    out = spec.to_json()
    lv = spec.level
    out["field"] = {"p": lv.p, "h": lv.h, "n": lv.N, "m": 1}
    return out, None


def cmd_fingerprint(req: Request):
    return codes.fingerprint(req.code(), req.max_steps), None


def cmd_suite(req: Request):
    res = suites.run_suite(str(req.need("name")))
    cert = None if res["passed"] else {"failed": [c for c in res["cases"] if not c["passed"]]}
    return res, cert


# command name -> (handler, allowed payload keys)
_CODE_KEYS = {"field", "polys", "code"}
COMMANDS = {
    "field-info": (cmd_field_info, {"field", "elements"}),
    "eval": (cmd_eval, {"field", "poly", "points"}),
    "compose": (cmd_compose, {"field", "f", "g"}),
    "is-mrd": (cmd_is_mrd, _CODE_KEYS | {"route"}),
    "min-distance": (cmd_min_distance, _CODE_KEYS),
    "dual": (cmd_dual, _CODE_KEYS | {"check_direct"}),
    "idealisers": (cmd_idealisers, _CODE_KEYS),
    "transform": (cmd_transform, _CODE_KEYS | {"g", "h", "rho"}),
    "lift": (cmd_lift, _CODE_KEYS | {"m"}),
    "exceptional-probe": (cmd_exceptional_probe, _CODE_KEYS | {"m_max"}),
    "moore-det": (cmd_moore_det, _CODE_KEYS | {"points"}),
    "is-moore": (cmd_is_moore, _CODE_KEYS | {"method"}),
    "index": (cmd_index, _CODE_KEYS),
    "normalize": (cmd_normalize, _CODE_KEYS),
    "is-ap": (cmd_is_ap, {"exponents", "allow_permutation"}),
    "variety": (cmd_variety, _CODE_KEYS | {"action", "lambdas", "first_only"}),
    "family": (cmd_family, {"id", "q", "n", "k", "s", "t", "delta"}),
    "fingerprint": (cmd_fingerprint, _CODE_KEYS),
    "suite": (cmd_suite, {"name"}),
}


# -- argument parsing ---------------------------------------------------------------------

def _json_arg(s: str):
    try:
        return json.loads(s)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON argument: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    io = common.add_argument_group("input/output")
    io.add_argument("--json", dest="json_payload", help="request payload as a JSON string")
    io.add_argument("--in", dest="infile", help="read the payload from FILE ('-' for stdin)")
    io.add_argument("--out", dest="outfile", help="write the response to FILE")
    io.add_argument("--max-steps", type=int, help="enumeration guard per sweep (default 2^24)")
    io.add_argument("--seed", type=int, help="seed for randomized choices")
    io.add_argument("--threads", type=int, default=1, help="worker cap (sweeps run in-process)")
    io.add_argument("--no-timing", action="store_true", help="omit timing_ms for byte-stable output")
    fld = common.add_argument_group("field")
    fld.add_argument("--p", type=int, dest="field_p")
    fld.add_argument("--q", type=int, dest="field_q")
    fld.add_argument("--h", type=int, dest="field_h")
    fld.add_argument("--n", type=int, dest="field_n")
    fld.add_argument("--polys", type=_json_arg, help="JSON list of linearized polynomials")

    parser = _Parser(prog="moorecodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "eval":
            sp.add_argument("--poly", type=_json_arg)
            sp.add_argument("--points", type=_json_arg)
        elif name == "compose":
            sp.add_argument("--f", type=_json_arg)
            sp.add_argument("--g", type=_json_arg)
        elif name == "is-mrd":
            sp.add_argument("--route", choices=["full", "right-scaling", "subspace"])
        elif name == "dual":
            sp.add_argument("--check-direct", action="store_true", default=None)
        elif name == "transform":
            sp.add_argument("--g", type=_json_arg)
            sp.add_argument("--h-map", dest="h", type=_json_arg, help="right factor h (JSON polynomial)")
            sp.add_argument("--rho", type=int)
        elif name == "lift":
            sp.add_argument("--m", type=int)
        elif name == "exceptional-probe":
            sp.add_argument("--m-max", type=int)
        elif name == "moore-det":
            sp.add_argument("--points", type=_json_arg)
        elif name == "is-moore":
            sp.add_argument("--method", choices=["oracle", "mrd", "variety", "all"])
        elif name == "is-ap":
            sp.add_argument("--exponents", type=_json_arg)
            sp.add_argument("--allow-permutation", action="store_true", default=None)
        elif name == "variety":
            sp.add_argument("action", choices=["build", "divide", "points", "infinity", "singular"])
            sp.add_argument("--lambdas", type=_json_arg)
            sp.add_argument("--first-only", action="store_true", default=None)
        elif name == "family":
            sp.add_argument("id", help="G, T, Ps, LP, or a table row 1-14")
            sp.add_argument("--k", type=int)
            sp.add_argument("--s", type=int)
            sp.add_argument("--t", type=int)
            sp.add_argument("--delta", help="integer encoding or g^k")
        elif name == "suite":
            sp.add_argument("name", choices=list(suites.SUITES))
    return parser


_FLAG_KEYS = ("poly", "points", "f", "g", "h", "route", "check_direct", "rho", "m", "m_max", "method",
              "exponents", "allow_permutation", "action", "lambdas", "first_only", "id", "k", "s", "t",
              "delta", "name", "polys")


def _read_payload(args, have_flags: bool) -> dict:
    """Payload from --json or --in; piped stdin is read only when no flag carries payload keys."""
    text = None
    if args.json_payload is not None and args.infile is not None:
        raise InvalidInput("give either --json or --in, not both")
    if args.json_payload is not None:
        text = args.json_payload
    elif args.infile == "-":
        text = sys.stdin.read()
    elif args.infile is not None:
        try:
            with open(args.infile) as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {args.infile}: {exc}") from None
    elif not have_flags:
        try:
            if not sys.stdin.isatty():
                text = sys.stdin.read()
        except (OSError, ValueError, AttributeError):
            text = None
    if text is None or not text.strip():
        return {}
    payload = _json_arg(text)
    if not isinstance(payload, dict):
        raise InvalidInput("the request payload must be a JSON object")
    return payload


def _merge_flags(args, payload: dict) -> dict:
    payload = dict(payload)
    for key in _FLAG_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            payload[key] = v
    fspec = {k: getattr(args, f"field_{k}") for k in ("p", "q", "h", "n")
             if getattr(args, f"field_{k}") is not None}
    if args.command == "family":
        # family parameters are plain integers, not a field spec
        for k in ("q", "n"):
            if k in fspec:
                payload[k] = fspec.pop(k)
    if fspec:
        field = dict(payload.get("field") or {})
        field.update(fspec)
        payload["field"] = field
    return payload


def dispatch(command: str, payload: dict, max_steps=None, seed=None) -> tuple[dict, int]:
    """Run one request; returns (response without timing, exit code)."""
    resp = {"command": command, "result": None, "certificate": None}
    try:
        if command not in COMMANDS:
            raise InvalidInput(f"unknown command {command!r}")
        handler, allowed = COMMANDS[command]
        if max_steps is not None and max_steps < 0:
            raise InvalidInput("--max-steps must be non-negative")
        req = Request(command, payload, allowed, max_steps, seed)
        result, cert = handler(req)
        resp.update(status="ok", result=result, certificate=cert)
        return resp, EXIT_FALSE if cert is not None else EXIT_OK
    except GuardExceeded as exc:
        resp.update(status="guard-exceeded", error=str(exc),
                    guard={"what": exc.what, "needed": exc.needed, "limit": exc.limit})
        return resp, EXIT_GUARD
    except InternalError as exc:
        resp.update(status="internal", error=str(exc))
        return resp, EXIT_INTERNAL
    except (InvalidInput, NoMonomial, ValueError, TypeError, KeyError, ZeroDivisionError, OverflowError) as exc:
        resp.update(status="invalid", error=str(exc) or type(exc).__name__)
        return resp, EXIT_INVALID


def main(argv=None) -> int:
    t0 = time.perf_counter()
    argv = sys.argv[1:] if argv is None else list(argv)
    outfile, no_timing, command = None, "--no-timing" in argv, None
    try:
        args = build_parser().parse_args(argv)
        outfile, no_timing, command = args.outfile, args.no_timing, args.command
        if args.threads < 1:
            raise InvalidInput("--threads must be at least 1")
        have_flags = bool(_merge_flags(args, {}))
        payload = _merge_flags(args, _read_payload(args, have_flags))
        resp, code = dispatch(command, payload, args.max_steps, args.seed)
    except InvalidInput as exc:
        resp, code = {"command": command, "status": "invalid", "error": str(exc),
                      "result": None, "certificate": None}, EXIT_INVALID
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if not no_timing:
        resp["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    text = json.dumps(resp, sort_keys=True, default=_jsonable) + "\n"
    if outfile:
        with open(outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _jsonable(obj):
    if hasattr(obj, "item"):
        return obj.item()
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


if __name__ == "__main__":
    sys.exit(main())
