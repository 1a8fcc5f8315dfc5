import json

import pytest
from hypothesis import given, settings

from radparts.arith import parse_rational
from radparts import kappa_rank1
from radparts.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main

from strategies import varsigmas


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_simple_zero_twist(capsys):
    code, env = run_json(capsys, "simple", "--varsigma", "0,0,0")
    assert code == EXIT_OK
    assert env["result"]["simple"] is True and env["result"]["a_simple_varsigma"] is True
    assert set(env) == {"command", "inputs", "result", "warnings"}


def test_hc_series(capsys):
    code, env = run_json(capsys, "hc", "series", "--ell", "2")
    r = env["result"]
    assert r["length"] == 4
    assert [(f["J"], f["multiplicity"]) for f in r["factors"]] == [([], 2), ([0], 1), ([1], 1)]
    assert env["warnings"] == []
    code, env = run_json(capsys, "hc", "series", "--ell", "3")
    assert (env["result"]["torsion_count"], env["result"]["torsion_count_alt"]) == (9, 8)
    assert len(env["warnings"]) == 1
    code, _, err = run(capsys, "hc", "series", "--ell", "21")
    assert code == EXIT_USAGE and "capped" in err


def test_weyl_commands(capsys):
    code, env = run_json(capsys, "weyl", "casimir")
    assert code == EXIT_OK and env["result"]["ok"] and env["result"]["omega_plus_1"]["verdict"] == "Member"
    code, env = run_json(capsys, "weyl", "verify-section2", "--bound", "8")
    assert code == EXIT_OK and env["result"]["ok"]
    code, env = run_json(capsys, "weyl", "member", "--target", "(x0*d0+1)*d0",
                         "--gens", "x0*d0 - x1*d1; d0*d1", "--bound", "4")
    assert code == EXIT_OK and env["result"]["verdict"] == "Member"
    code, env = run_json(capsys, "weyl", "member", "--target", "1", "--gens", "d0;d1")
    assert code == EXIT_INCONCLUSIVE and env["result"]["verdict"] == "Inconclusive"
    code, _, err = run(capsys, "weyl", "member", "--target", "x0^3", "--gens", "x0", "--bound", "1")
    assert code == EXIT_USAGE
    code, env = run_json(capsys, "weyl", "radial", "--varsigma", "1/2,0,-1/2", "--j", "2")
    assert env["result"] == {"ok": True, "coefficient": "15/2"}


def test_kappa_and_hecke(capsys):
    code, env = run_json(capsys, "kappa", "--ell", "2", "--n", "3", "--varsigma", "0,0", "--inf", "1/3")
    assert (env["result"]["kappa00"], env["result"]["kappa1"]) == ("5/6", ["0", "1/2"])
    code, env = run_json(capsys, "kappa", "--weighted-line", "2", "-1/3", "-1")
    assert env["result"]["kappa"] == ["-2/3", "-1/2", "-1"]
    code, env = run_json(capsys, "hecke", "--ell", "3", "--n", "2", "--varsigma", "0,0,0")
    r = env["result"]
    assert r["u"] == ["1", "1", "1"] and (r["q0"], r["q1"], r["normalized_q"]) == ("-1", "1", "1")
    assert r["semisimple"] is False and r["structure_at_zero"]["dimension"] == 18
    code, env = run_json(capsys, "regular", "--ell", "2", "--n", "1", "--varsigma", "0,1/4")
    assert env["result"]["regular"] is True


def test_simple_options(capsys):
    code, env = run_json(capsys, "simple", "--kappa", "0,-1/2", "--oracle")
    r = env["result"]
    assert (r["h_simple"], r["a_simple"]) == (False, False)
    assert r["oracle"]["reports"][0]["dim_L"] == 1 and env["warnings"] == []
    code, env = run_json(capsys, "simple", "--varsigma", "1,0", "--wreath", "3")
    assert env["result"]["wreath_a_simple"] is False


def test_symspace_and_invariants(capsys):
    code, env = run_json(capsys, "symspace", "semisimple-list")
    assert env["result"]["labels"] == ["diagonal", "AII_n", "DII_p", "EIV"]
    code, env = run_json(capsys, "symspace", "check", "BI")
    assert env["result"]["semisimple"] is False and env["result"]["source"] == "computed"
    code, env = run_json(capsys, "symspace", "list")
    assert len(env["result"]["rows"]) == 16
    code, _, _ = run(capsys, "symspace", "check", "nope")
    assert code == EXIT_USAGE
    code, env = run_json(capsys, "invariants", "delta", "--ell", "2", "--n", "2")
    assert env["result"]["delta"] == "x1^6*x2^2 - 2*x1^4*x2^4 + x1^2*x2^6"
    code, env = run_json(capsys, "invariants", "delta", "--ell", "1", "--n", "2")
    assert env["result"]["scalar"] is None and env["warnings"]
    code, env = run_json(capsys, "invariants", "factor-check")
    assert env["result"]["ok"] and len(env["result"]["checks"]) == 16
    code, env = run_json(capsys, "invariants", "semiinv", "--ell", "2", "--n", "2", "--c", "1", "--sign", "1")
    assert env["result"]["h_chi"] == "x1*x2" and env["result"]["degree"] == 2
    code, _, _ = run(capsys, "invariants", "semiinv", "--ell", "2", "--n", "2", "--c", "5", "--sign", "1")
    assert code == EXIT_USAGE


def test_symspace_table_override(capsys, tmp_path):
    code, env = run_json(capsys, "symspace", "dump")
    p = tmp_path / "t.tsv"
    p.write_text(env["result"]["tsv"], encoding="utf-8")
    code, env2 = run_json(capsys, "symspace", "semisimple-list", "--table", str(p))
    assert code == EXIT_OK and env2["result"]["labels"][-1] == "EIV"
    p.write_text(env["result"]["tsv"].replace("all:8,0\t1", "all:8,0\t-1"), encoding="utf-8")
    code, _, err = run(capsys, "symspace", "list", "--table", str(p))
    assert code == EXIT_USAGE and "EIV" in err


@pytest.mark.parametrize("argv", [
    ["frobnicate"], [], ["simple", "--kappa", "0.5"], ["hc"], ["kappa", "--ell", "3", "--varsigma", "0,0"],
    ["weyl", "member", "--target", "x0 +", "--gens", "d0"], ["hecke", "--ell", "2", "--varsigma", "0,0"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def _human_pairs(text):
    pairs = {}
    for line in text.splitlines()[1:]:
        if " = " in line:
            k, v = line.split(" = ", 1)
            pairs[k] = v
    return pairs


@settings(max_examples=30, deadline=None)
@given(varsigmas(max_ell=4))
def test_json_and_human_agree(v):
    import contextlib
    import io
    args = ["kappa", "--n", "2", "--varsigma", ",".join(str(x) for x in v.entries), "--inf", str(v.infinity)]
    buf_h, buf_j = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf_h):
        assert main(args) == EXIT_OK
    with contextlib.redirect_stdout(buf_j):
        assert main(["--json"] + args) == EXIT_OK
    env = json.loads(buf_j.getvalue())
    human = _human_pairs(buf_h.getvalue())
    r = env["result"]
    assert human["kappa00"] == r["kappa00"]
    assert human["kappa1"] == "[" + ", ".join(r["kappa1"]) + "]"
    # envelopes re-parse to the exact values
    assert tuple(parse_rational(x) for x in r["kappa1"]) == kappa_rank1(v).kappa
    assert parse_rational(r["kappa00"]) == v.infinity + parse_rational("1/2")


def test_module_entry_point():
    import subprocess
    import sys
    out = subprocess.run([sys.executable, "-m", "radparts", "--json", "hc", "decompose", "--ell", "2", "--n", "3"],
                         capture_output=True, text=True, check=True)
    env = json.loads(out.stdout)
    assert [s["multiplicity"] for s in env["result"]["summands"]] == [1, 2, 1]
