import json
import shutil
import subprocess

import pytest

from loop_schubert import affschubert, cli
from loop_schubert.affine import AffineElement, Coweight
from loop_schubert.golden import h_poly
from loop_schubert.polyring import from_json_obj, from_text, ring_env


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_affine_rho(capsys):
    code, out, _ = run(capsys, "affine", "--n", "3", "--lambda", "w:1,1")
    assert code == 0
    assert out.strip().splitlines()[-1].split()[-1] == "h1"


def test_affine_json(capsys):
    code, out, _ = run(capsys, "affine", "--n", "4", "--lambda", "w:0,-1,0", "--word", "s0 s3 s1 s0", "--json")
    assert code == 0
    obj = json.loads(out)
    assert from_json_obj(obj["schubert_h"]) == h_poly("h2^2 - h1 * h3", 4)
    assert obj["m_word"] == "sigma^2 s0 s3 s1 s0"  # the word given on the command line
    assert obj["lambda_hat"] == [1, 2, 1]


def test_affine_full(capsys):
    code, out, _ = run(capsys, "affine", "--n", "3", "--lambda", "w:0,-1", "--full", "--json")
    obj = json.loads(out)
    assert set(obj) >= {"tilde_x", "tilde_xy", "schubert_h"}
    assert from_json_obj(obj["tilde_x"]) == from_text("x1^2 * x2 * x3 - x1^2 * x2^2", ("x1", "x2", "x3"))


def test_affine_errors(capsys):
    code, _, err = run(capsys, "affine", "--n", "3", "--lambda", "w:1")
    assert code == cli.EXIT_PARSE and "error" in err
    code, _, err = run(capsys, "affine", "--n", "3", "--lambda", "w:1,1", "--word", "s1 s0")
    assert code == cli.EXIT_PRECONDITION
    code, _, _ = run(capsys, "affine", "--n", "3", "--lambda", "w:1,1", "--word", "s0 q1")
    assert code == cli.EXIT_PARSE


def test_size_cap_is_a_precondition(capsys, monkeypatch):
    monkeypatch.setenv("LOOP_SCHUBERT_MAX_DEGREE", "3")
    affschubert._schubert_of_blocks.cache_clear()
    code, _, err = run(capsys, "affine", "--n", "3", "--lambda", "w:0,-2")
    assert code == cli.EXIT_PRECONDITION and "LOOP_SCHUBERT_MAX_DEGREE" in err


def test_double_and_single(capsys):
    env = ring_env(3, 3)
    code, out, _ = run(capsys, "double", "--n", "3", "--w", "s2 s1")
    assert code == 0 and from_text(out.strip(), env) == from_text("x1^2 - y2 * x1 - y1 * x1 + y1 * y2", env)
    code, out, _ = run(capsys, "single", "--n", "3", "--w", "3 2 1")
    assert from_text(out.strip(), env) == from_text("x1^2 * x2", env)
    code, out, _ = run(capsys, "fixed-point", "--n", "3", "--w", "1 2 3", "--json")
    assert code == 0 and json.loads(out)["vars"] == list(env)


def test_theorem_a(capsys):
    code, out, _ = run(capsys, "theorem-a", "--n", "3", "--lambda", "w:1,1", "--mu", "w:0,-1")
    assert code == 0 and "holds" in out
    code, out, _ = run(capsys, "theorem-a", "--n", "3", "--lambda", "w:1,1", "--mu", "w:1,0", "--json")
    assert code == cli.EXIT_PRECONDITION
    assert json.loads(out)["preconditions_hold"] is False


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "--type", "C2", "--word", "s0 s1 s0", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["lambda"] == [0, 1]
    assert obj["length_x"] == obj["length_y"] + obj["length_t"]
    code, out, _ = run(capsys, "factorize", "--type", "A2", "--word", "s1 s0")
    assert code == 0 and "[0, 1]" in out
    code, _, _ = run(capsys, "factorize", "--type", "[[2,-1],[-1,2]]", "--word", "s1 s0")
    assert code == 0
    code, _, err = run(capsys, "factorize", "--type", "A2", "--word", "s0 s1")
    assert code == cli.EXIT_PRECONDITION
    code, _, _ = run(capsys, "factorize", "--type", "A2", "--word", "s5")
    assert code == cli.EXIT_PARSE
    code, _, _ = run(capsys, "factorize", "--type", "Q7", "--word", "s1")
    assert code == cli.EXIT_PARSE


def test_factorize_never_prints_floats(capsys):
    code, out, _ = run(capsys, "factorize", "--type", "G2", "--word", "s0 s2 s1 s0", "--json")
    if code == 0:
        assert "." not in out


def test_verify_golden(capsys):
    code, out, _ = run(capsys, "verify-golden")
    assert code == 0
    assert "FAIL" not in out
    code2, out2, _ = run(capsys, "verify-paper")
    assert code2 == 0 and out2 == out


def test_table_round_trip(tmp_path, capsys):
    path = tmp_path / "t.json"
    code, _, _ = run(capsys, "table", "--n", "3", "--max-length", "4", "--out", str(path))
    assert code == 0
    text = path.read_text()
    records = cli.load_table(text)
    assert cli.dump_table(records) == text
    keys = [(r.length, r.lam) for r in records]
    assert keys == sorted(keys)
    for r in records:
        assert r.polynomial().dim() == 2 * r.length
        v = AffineElement.from_word(3, r.m_word, r.sigma_power)
        assert affschubert.affine_schubert_element(v, r.m_word) == r.polynomial()
        assert Coweight(3, tuple(r.lam)) == r.coweight()
    # stable across runs
    code, _, _ = run(capsys, "table", "--n", "3", "--max-length", "4", "--out", str(tmp_path / "u.json"))
    assert (tmp_path / "u.json").read_text() == text


def test_table_full_records(capsys):
    records = cli.build_table(3, 2, full=True)
    assert all(r.tilde_x is not None for r in records if r.length)
    obj = json.loads(cli.dump_table(records))
    assert cli.dump_table(cli.load_table(json.dumps(obj, indent=1, sort_keys=True) + "\n")) == cli.dump_table(records)


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("loop-schubert") is None, reason="console script not installed")
def test_console_scripts():
    for prog in ("loop-schubert", "schubert"):
        res = subprocess.run([prog, "affine", "--n", "3", "--lambda", "w:0,-1"], capture_output=True, text=True)
        assert res.returncode == 0
        assert res.stdout.strip().endswith("-h2 + h1^2")
