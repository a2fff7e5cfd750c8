import json
import os
import subprocess
import sys

import pytest

from quasibgg.cli import main
from quasibgg.verify import golden_dir, golden_name


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_roots(capsys):
    code, out = run(["roots", "--type", "A2"], capsys)
    assert code == 0
    assert json.loads(out)["num_positive_roots"] == 3


def test_weyl(capsys):
    code, out = run(["weyl", "--type", "B2", "--elements"], capsys)
    d = json.loads(out)
    assert d["order"] == 8 and len(d["elements"]) == 8


def test_char_weyl(capsys):
    code, out = run(["char", "weyl", "--type", "A1", "--weight", "2"], capsys)
    assert code == 0 and json.loads(out)["dimension"] == 3


def test_char_quasi_verma_and_sl2(capsys):
    code, out = run(["char", "quasi-verma", "--type", "A2", "--weight", "0,0", "--w", "s1s2", "--truncate", "2"], capsys)
    assert code == 0 and "expansion" in json.loads(out)
    code, out = run(["char", "simple-sl2", "--ell", "3", "--weight", "-2", "--truncate", "4"], capsys)
    wts = sorted(t["wt"][0] for t in json.loads(out)["expansion"])
    assert wts == [-10, -8, -4, -2]


def test_verify_sl2(capsys):
    code, out = run(["verify", "sl2", "--ell", "3", "--kmax", "4"], capsys)
    assert code == 0 and json.loads(out)["pass"]


def test_bgg_build(tmp_path, capsys):
    target = tmp_path / "a2.json"
    code, out = run(["bgg", "build", "--type", "A2", "--weight", "1,0", "--out", str(target)], capsys)
    assert code == 0
    assert json.loads(target.read_text()) == json.loads(out)
    code, out = run(["bgg", "build", "--type", "A1", "--weight", "0", "--cousin"], capsys)
    assert {l["degree"] for l in json.loads(out)["layers"]} == {0, 1}


def test_qsl2(capsys):
    code, out = run(["qsl2", "verify", "--mu", "2", "--ell", "5"], capsys)
    assert code == 0
    assert all(c["pass"] for c in json.loads(out)["cases"])


def test_semiinf(capsys):
    code, out = run(["semiinf", "chformula", "--type", "A1", "--ell", "3", "--lambda", "0", "--truncate", "2"], capsys)
    d = json.loads(out)
    assert code == 0 and "caveat" not in d
    code, out = run(["semiinf", "chformula", "--type", "A1", "--ell", "3", "--lambda", "1", "--general-w", "s1"], capsys)
    assert code == 0 and json.loads(out)["w"] == [1]
    code, out = run(["semiinf", "chformula", "--ell", "9"], capsys)
    assert "caveat" in json.loads(out)
    code, out = run(["semiinf", "oracle-rank1", "--ell", "3", "--truncate", "3"], capsys)
    assert json.loads(out)["calibration"]["calibration"]["converged"]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["roots"],
    ["roots", "--type", "Q7"],
    ["char", "weyl", "--type", "A2", "--weight", "1"],
    ["char", "weyl", "--type", "A2", "--weight", "1,x"],
    ["char", "weyl", "--type", "A2", "--weight", "1,-1"],
    ["char", "quasi-verma", "--type", "A2", "--weight", "0,0", "--w", "s3"],
    ["semiinf", "chformula", "--ell", "4"],
    ["verify", "suite", "nope"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_verify_empty_types(capsys):
    code, out = run(["verify", "all", "--types", ""], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["cases"] == [] and d["pass"]


def test_verify_list(capsys):
    code, out = run(["verify", "list"], capsys)
    assert len(json.loads(out)["suites"]) == 10


def test_corrupted_golden_fails(tmp_path, monkeypatch, capsys):
    name = golden_name("A1", 3, (0,), 10)
    good = json.loads((golden_dir() / name).read_text())
    good["coefficients"][3]["residual"] = {"1": "5"}
    (tmp_path / name).write_text(json.dumps(good))
    monkeypatch.setenv("QBGG_GOLDEN_DIR", str(tmp_path))
    code, out = run(["verify", "suite", "oracle-calibration"], capsys)
    assert code == 1
    bad = [c for c in json.loads(out)["cases"] if not c["pass"]]
    assert [c["identity_id"] for c in bad] == ["oracle.golden_match"]
    assert bad[0]["witness"]["differing_keys"] == ["coefficients"]


def test_missing_golden_fails_then_bless(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QBGG_GOLDEN_DIR", str(tmp_path))
    code, _ = run(["verify", "suite", "oracle-calibration"], capsys)
    assert code == 1
    code, _ = run(["verify", "suite", "oracle-calibration", "--bless"], capsys)
    assert code == 0
    code, _ = run(["verify", "suite", "oracle-calibration"], capsys)
    assert code == 0


def test_pretty_flag(capsys):
    _, compact = run(["roots", "--type", "A1"], capsys)
    _, pretty = run(["roots", "--type", "A1", "--pretty"], capsys)
    _, pretty2 = run(["--pretty", "roots", "--type", "A1"], capsys)
    assert "\n  " in pretty and pretty == pretty2
    assert json.loads(compact) == json.loads(pretty)


def test_output_is_byte_stable():
    cmd = [sys.executable, "-m", "quasibgg.cli", "verify", "suite", "bgg-signs"]
    env = dict(os.environ)
    a = subprocess.run(cmd, capture_output=True, env=env)
    b = subprocess.run(cmd, capture_output=True, env=env)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_pure_python_backend_gives_same_output():
    cmd = [sys.executable, "-m", "quasibgg.cli", "semiinf", "chformula", "--type", "B2", "--ell", "3",
           "--lambda", "1,0", "--truncate", "2"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True, env=dict(os.environ, QBGG_PURE_PYTHON="1"))
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
