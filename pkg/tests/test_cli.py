import hashlib
import io
import json

import pytest

from hopfdual.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, run_command
from hopfdual.hopfcore import verify_hopf
from hopfdual.nichols import poly_mul
from hopfdual.serialize import load, save
from hopfdual.catalog import taft


def run(*argv):
    out = io.StringIO()
    code = run_command([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_dualize_with_involutivity(tmp_path):
    out_path = tmp_path / "r.json"
    code, text = run("dualize", "taft-datum:4,2,2", "-o", out_path, "--check-involutive")
    assert code == EXIT_OK
    assert "involutivity: pass" in text.splitlines()
    assert text.rstrip().endswith("status: pass")
    H = load(out_path)
    assert H.dim == 8 and verify_hopf(H).ok


def test_json_report_is_byte_identical_without_timings(tmp_path):
    o = tmp_path / "r.json"
    argv = ("--json", "--no-timings", "dualize", "taft-datum:3,3,1", "-o", o, "--check-involutive")
    a = run(*argv)
    b = run(*argv)
    assert a == b and a[0] == EXIT_OK
    rep = json.loads(a[1])
    assert rep["status"] == "pass"
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names) and "involutivity" in names
    assert all("seconds" not in c for c in rep["checks"])
    assert rep["artifact_hashes"][str(o)] == hashlib.sha256(o.read_bytes()).hexdigest()


def test_timings_present_by_default(tmp_path):
    code, text = run("--json", "coinvariants", "s3-datum", "-o", tmp_path / "k.json")
    rep = json.loads(text)
    assert code == EXIT_OK and rep["results"]["dim"] == 3
    assert any("seconds" in c for c in rep["checks"])


def test_nichols_hilbert_series():
    code, text = run("--json", "nichols", "--preset", "sl21-M", "--n", 3,
                     "--max-degree", 6, "--hilbert", "--cartan")
    res = json.loads(text)["results"]
    assert code == EXIT_OK
    expect = poly_mul(poly_mul([1, 1], [1, 1]), [1, 0, 1, 0, 1])
    assert res["hilbert_coefficients"] == expect
    assert res["hilbert"] == "1 + 2t + 2t^2 + 2t^3 + 2t^4 + 2t^5 + t^6"
    assert res["total_dimension"] == 12 and res["hilbert_complete"]
    assert res["cartan"] == [[2, -1], [-1, 2]]


def test_nichols_reflection_and_materialize(tmp_path):
    o = tmp_path / "b.json"
    code, text = run("--json", "nichols", "--preset", "sl21-M", "--n", 3, "--max-degree", 8,
                     "--hilbert", "--reflect", 1, "--materialize", "-o", o)
    rep = json.loads(text)
    assert code == EXIT_OK, text
    assert rep["results"]["reflected_hilbert"] == "1 + 2t + 3t^2 + 3t^3 + 2t^4 + t^5"
    assert load(o).dim == 12


def test_nichols_bad_preset():
    assert run("nichols", "--preset", "sl21-M", "--n", 2, "--max-degree", 4)[0] == EXIT_INPUT
    assert run("nichols", "--preset", "nope", "--max-degree", 4)[0] == EXIT_INPUT


ENV = {"kind": "env", "cyclotomic_order": 3, "default": "H", "hopf": {"H": "taft(3)"}}


@pytest.fixture
def env_file(tmp_path):
    p = tmp_path / "env.json"
    p.write_text(json.dumps(ENV))
    return p


def test_eval_equal_and_unequal(env_file):
    code, text = run("eval", "S . mu", "--env", env_file,
                     "--equals", "mu . braid[H,H] . (S * S)")
    assert code == EXIT_OK and "equal: pass" in text
    code, text = run("eval", "mu", "--env", env_file, "--equals", "mu . braid[H,H]")
    assert code == EXIT_FAIL and "witness" in text


def test_eval_input_errors(env_file, tmp_path):
    assert run("eval", "mu . mu", "--env", env_file)[0] == EXIT_INPUT
    assert run("eval", "mu . (", "--env", env_file)[0] == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "hopf"}))
    assert run("eval", "mu", "--env", bad)[0] == EXIT_INPUT
    assert run("eval", "mu", "--env", tmp_path / "missing.json")[0] == EXIT_INPUT


def test_eval_value(env_file):
    code, text = run("--json", "eval", "Delta . eta", "--env", env_file)
    assert code == EXIT_OK
    assert json.loads(text)["results"]["value"]


def test_verify_documents(tmp_path):
    good = tmp_path / "t.json"
    good.write_text(json.dumps(save(taft(3))))
    assert run("verify", good)[0] == EXIT_OK
    doc = save(taft(3))
    doc["Delta"].append([1, 1, 0, "1"])
    bad = tmp_path / "b.json"
    bad.write_text(json.dumps(doc))
    code, text = run("verify", bad)
    assert code == EXIT_FAIL
    assert "coassociativity: FAIL" in text
    del doc["eps"]
    bad.write_text(json.dumps(doc))
    assert run("verify", bad)[0] == EXIT_INPUT


def test_invalid_parameters_exit_2(tmp_path):
    assert run("catalog", "hat-taft", 4, 2, 1)[0] == EXIT_INPUT
    assert run("dualize", "hat-taft-datum:4,2,1", "-o", tmp_path / "x.json")[0] == EXIT_INPUT
    assert run("frobnicate")[0] == EXIT_INPUT


def test_catalog_list_and_build(tmp_path):
    code, text = run("--json", "catalog", "list")
    entries = json.loads(text)["results"]["entries"]
    assert code == EXIT_OK and "hat_taft" in entries and "taft_datum" in entries
    o = tmp_path / "h.json"
    assert run("catalog", "hat-taft", 4, 2, 2, "-o", o)[0] == EXIT_OK
    assert load(o).dim == 8
