import json
import subprocess
import sys

import pytest

from moorecodes import InvalidInput, field_ctx
from moorecodes.cli import dispatch, main, parse_element

F24 = {"p": 2, "n": 4}
XQ2 = [[[0, 1]], [[2, 1]]]


def run(argv, capsys):
    code = main(argv + ["--no-timing"])
    return code, json.loads(capsys.readouterr().out)


def test_parse_element():
    ctx = field_ctx(2, 4)
    assert parse_element("0", ctx) == 0
    assert parse_element("3", field_ctx(2, 2)) == 3
    assert field_ctx(2, 2).digits(3) == [1, 1]
    assert parse_element("g^3", ctx) == ctx.pow(ctx.generator, 3) == 8
    assert parse_element("g^-1", ctx) == ctx.inv(2)
    assert parse_element(7, ctx) == 7
    for bad in ("16", "-1", "x", "g^", "1.5", None, True):
        with pytest.raises(InvalidInput):
            parse_element(bad, ctx)


def test_parse_round_trip():
    ctx = field_ctx(3, 4)
    for a in range(ctx.order):
        assert parse_element(str(a), ctx) == a


def test_is_moore_oracle_certificate(capsys):
    code, out = run(["is-moore", "--method", "oracle", "--json", json.dumps({"field": F24, "polys": XQ2})], capsys)
    assert code == 2
    assert out["status"] == "ok"
    assert out["result"]["verdict"] is False
    assert out["certificate"]["points"] == [1, 6]
    assert out["certificate"]["det"] == 0 and out["certificate"]["fq_rank"] == 2


def test_is_moore_all_methods(capsys):
    code, out = run(["is-moore", "--method", "all", "--q", "2", "--n", "4", "--polys", json.dumps(XQ2)], capsys)
    assert code == 2
    assert set(out["certificate"]) == {"oracle", "mrd", "variety"}
    code, out = run(["is-moore", "--method", "all", "--q", "2", "--n", "4", "--polys", "[[[0,1]],[[1,1]]]"], capsys)
    assert code == 0 and out["result"]["verdict"] is True and out["certificate"] is None


def test_exceptional_probe_gabidulin(capsys):
    code, out = run(["exceptional-probe", "--m-max", "3", "--q", "2", "--n", "4", "--polys",
                     "[[[0,1]],[[1,1]]]"], capsys)
    assert code == 0
    assert out["result"]["verdicts"] == [True, True, True]


def test_malformed_field_spec(capsys):
    code, out = run(["is-mrd", "--json", json.dumps({"field": {"p": 4, "n": 2}, "polys": XQ2})], capsys)
    assert code == 4 and out["status"] == "invalid"
    code, out = run(["is-mrd", "--json", "{\"field\": "], capsys)
    assert code == 4
    code, out = run(["is-mrd", "--json", json.dumps({"field": F24, "polys": XQ2, "extra": 1})], capsys)
    assert code == 4 and "extra" in out["error"]


def test_guard_exit_code(capsys):
    polys = [[[0, 1]], [[2, 1]], [[3, 1]], [[4, 1]]]
    code, out = run(["is-mrd", "--q", "3", "--n", "7", "--polys", json.dumps(polys), "--max-steps", "1000"], capsys)
    assert code == 3 and out["status"] == "guard-exceeded"
    assert out["guard"]["limit"] == 1000


def test_is_mrd_certificate(capsys):
    code, out = run(["is-mrd", "--q", "2", "--n", "4", "--polys", json.dumps(XQ2)], capsys)
    assert code == 2
    assert out["certificate"]["codeword"] == [1, 1]
    assert out["certificate"]["kernel_dim"] == 2


def test_other_commands(capsys):
    base = ["--q", "2", "--n", "4"]
    assert run(["eval", *base, "--poly", "[[1,1]]", "--points", "[2, 3]"], capsys)[1]["result"]["values"] == [4, 5]
    out = run(["compose", *base, "--f", "[[1,1]]", "--g", "[[3,1]]"], capsys)[1]
    assert out["result"]["poly"] == {"coeffs": [1, 0, 0, 0]}
    out = run(["dual", *base, "--polys", "[[[0,1]],[[1,1]]]", "--check-direct"], capsys)[1]
    assert out["result"]["basis"] == [{"coeffs": [0, 0, 1, 0]}, {"coeffs": [0, 0, 0, 1]}]
    out = run(["min-distance", *base, "--polys", json.dumps(XQ2)], capsys)[1]
    assert out["result"]["min_distance"] == 2
    out = run(["idealisers", *base, "--polys", "[[[0,1]],[[1,1]]]"], capsys)[1]
    assert out["result"]["left"]["dim_fq"] == 4 and out["result"]["right"]["dim_fq"] == 4
    out = run(["index", *base, "--polys", "[[[1,1]],[[0,1],[2,1]]]"], capsys)[1]
    assert out["result"]["index"] == 1
    out = run(["normalize", *base, "--polys", "[[[0,1]],[[0,1],[1,1]]]"], capsys)[1]
    assert all(out["result"]["assumption_flags"].values())
    out = run(["is-ap", "--exponents", "[0,2,4]"], capsys)[1]
    assert out["result"]["verdict"] is True
    out = run(["moore-det", *base, "--polys", json.dumps(XQ2), "--points", "[1, \"g^5\"]"], capsys)[1]
    assert out["result"]["det"] == 0 and out["result"]["fq_rank"] == 2
    out = run(["lift", *base, "--polys", json.dumps(XQ2), "--m", "2"], capsys)[1]
    assert out["result"]["field"]["n"] == 8
    out = run(["fingerprint", *base, "--polys", "[[[0,1]],[[1,1]]]"], capsys)[1]
    assert out["result"]["rank_distribution"] == [1, 0, 0, 225, 30]
    out = run(["transform", *base, "--polys", "[[[0,1]],[[1,1]]]", "--seed", "4"], capsys)[1]
    assert out["status"] == "ok"
    out = run(["field-info", *base], capsys)[1]
    assert out["result"]["defining_poly"] == [1, 1, 0, 0, 1]


def test_variety_commands(capsys):
    base = ["--q", "2", "--n", "4"]
    out = run(["variety", "divide", *base, "--polys", json.dumps(XQ2)], capsys)[1]
    assert out["result"]["W"] == [[[2, 0], 1], [[1, 1], 1], [[0, 2], 1]]
    code, out = run(["variety", "points", *base, "--polys", json.dumps(XQ2), "--first-only"], capsys)
    assert code == 2 and out["certificate"]["points"][0]["W_value"] == 0
    polys3 = "[[[0,1]],[[1,1]],[[2,1]]]"
    out = run(["variety", "infinity", *base, "--polys", polys3, "--lambdas", "[2]"], capsys)[1]
    assert out["result"]["points"] == [[0, 1, 0], [1, 0, 0], [1, 1, 0]]
    out = run(["variety", "singular", *base, "--polys", "[[[0,1]],[[1,1]]]"], capsys)[1]
    assert out["result"]["singular_points"][0]["multiplicity"] == 3
    out = run(["variety", "build", *base, "--polys", "[[[0,1]],[[1,1]]]"], capsys)[1]
    assert out["result"]["F"] == out["result"]["V"]


def test_family_command(capsys):
    code, out = run(["family", "T", "--q", "3", "--n", "4", "--k", "2", "--delta", "g^1"], capsys)
    assert code == 0 and out["result"]["valid"] is True and out["result"]["index_t"] == 1
    code, out = run(["family", "3", "--q", "3", "--t", "3", "--delta", "39"], capsys)
    assert out["result"]["validity"][1]["holds"] is True
    code, out = run(["family", "nope", "--q", "3"], capsys)
    assert code == 4


def test_suite_command(capsys):
    code, out = run(["suite", "paper-smoke"], capsys)
    assert code == 0 and out["result"]["passed"]
    code, out = run(["suite", "nope"], capsys)
    assert code == 4 and out["status"] == "invalid"


def test_in_out_files(tmp_path, capsys):
    req = tmp_path / "req.json"
    req.write_text(json.dumps({"field": F24, "polys": XQ2, "method": "oracle"}))
    res = tmp_path / "res.json"
    code = main(["is-moore", "--in", str(req), "--out", str(res), "--no-timing"])
    assert code == 2
    assert json.loads(res.read_text())["certificate"]["points"] == [1, 6]


def test_determinism_and_stdin():
    req = json.dumps({"field": F24, "polys": XQ2, "method": "all"})
    outs = [subprocess.run([sys.executable, "-m", "moorecodes.cli", "is-moore", "--no-timing"], input=req,
                           capture_output=True, text=True) for _ in range(2)]
    assert outs[0].returncode == 2
    assert outs[0].stdout == outs[1].stdout
    assert json.loads(outs[0].stdout)["status"] == "ok"


def test_dispatch_directly():
    resp, code = dispatch("index", {"field": F24, "polys": [[[0, 1], [1, 1]]]})
    assert code == 0 and resp["result"]["index"] is None
    resp, code = dispatch("nope", {})
    assert code == 4


def test_zero_curve_is_flagged(capsys):
    polys = "[[[0,1],[2,1]],[[0,1],[3,1]],[[0,1],[1,1]]]"
    code, out = run(["variety", "infinity", "--q", "2", "--n", "4", "--polys", polys, "--lambdas", "[1]"], capsys)
    assert code == 2 and out["result"]["identically_zero"]
    assert out["certificate"]["det"] == 0 and out["certificate"]["fq_rank"] == 3
