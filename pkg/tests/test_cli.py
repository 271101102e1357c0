import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose

from accretive.cli import main
from accretive.matcore import dump_matrix, load_matrix
from accretive.sector import sector_angle


@pytest.fixture
def pair_files(tmp_path):
    paths = []
    for k in range(2):
        p = tmp_path / f"m{k}.json"
        assert main(["gen", "--n", "3", "--alpha", "0.6", "--seed", str(k), "--out", str(p)]) == 0
        paths.append(str(p))
    return paths


def test_gen_writes_matrix_and_angle(tmp_path):
    out = tmp_path / "a.json"
    assert main(["gen", "--n", "4", "--alpha", "0.7", "--seed", "5", "--out", str(out)]) == 0
    A = load_matrix(out)
    meta = json.loads((tmp_path / "a.json.angle.json").read_text())
    assert A.shape == (4, 4)
    assert meta["angle"] == pytest.approx(0.7)
    assert sector_angle(A) == pytest.approx(meta["angle"], abs=1e-9)


def test_gen_is_seeded(capsys):
    main(["gen", "--n", "2", "--alpha", "0.3", "--seed", "1"])
    first = capsys.readouterr().out
    main(["gen", "--n", "2", "--alpha", "0.3", "--seed", "1"])
    assert capsys.readouterr().out == first


def test_gen_rejects_wide_angle(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--n", "2", "--alpha", "1.5"])
    assert exc.value.code == 2


def test_eval_fn(pair_files, capsys):
    assert main(["eval", "fn", "power:0.5", pair_files[0]]) == 0
    obj = json.loads(capsys.readouterr().out)
    X = np.array([complex(*z) for z in obj["data"]]).reshape(obj["n"], obj["n"])
    A = load_matrix(pair_files[0])
    assert_allclose(X @ X, A, atol=1e-12)
    assert obj["route"] == "diagonalization"


@pytest.mark.parametrize("spec", ["geom:0.5", "logmean:0.3", "sigma:harm:0.2", "harm:0.5"])
def test_eval_mean(pair_files, tmp_path, spec):
    out = tmp_path / "m.json"
    assert main(["eval", "mean", spec, *pair_files, "--out", str(out)]) == 0
    assert load_matrix(out).shape == (3, 3)


@pytest.mark.parametrize("spec", ["tsallis:0.5", "relative", "diff:affine:0.5,power:0.5"])
def test_eval_entropy(pair_files, tmp_path, spec):
    out = tmp_path / "e.json"
    assert main(["eval", "entropy", spec, *pair_files, "--out", str(out)]) == 0
    assert np.all(np.isfinite(load_matrix(out)))


def test_eval_usage_errors(pair_files, tmp_path, capsys):
    assert main(["eval", "fn", "power:0.5", *pair_files]) == 2
    assert main(["eval", "fn", "cube:2", pair_files[0]]) == 2
    assert main(["eval", "entropy", "bogus", *pair_files]) == 2
    bad = tmp_path / "neg.json"
    dump_matrix(-np.eye(2), bad)
    assert main(["eval", "fn", "power:0.5", str(bad)]) == 2
    assert main(["eval", "fn", "power:0.5", str(tmp_path / "missing.json")]) == 2


def test_eval_indefinite_real_part_is_usage_error(tmp_path):
    p = tmp_path / "j.json"
    # the real part [[a, 1/2], [1/2, a]] is indefinite
    dump_matrix(np.array([[1e-3, 1.0], [0.0, 1e-3]]), p)
    assert main(["eval", "fn", "power:0.5", str(p)]) == 2


def test_eval_kernel_error(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    dump_matrix(np.diag([1e-26, 1.0]), a)
    dump_matrix(np.eye(2), b)
    assert main(["eval", "mean", "geom:0.5", str(a), str(b)]) == 3
    assert "sigma_min" in capsys.readouterr().err


def test_check_single_trial(capsys):
    assert main(["check", "POWER-ORDER", "--n", "3", "--alpha", "0.5", "--seed", "4"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1
    obj = json.loads(lines[0])
    assert obj["theorem"] == "POWER-ORDER" and obj["seed"] == 4 and obj["pass"] is True


def test_check_violation_exit_code(capsys):
    assert main(["check", "NORM-CHAIN", "--n", "3", "--alpha", "1.0", "--trials", "50"]) == 1


def test_check_unknown_id(capsys):
    assert main(["check", "NOPE"]) == 2
    assert "unknown theorem id" in capsys.readouterr().err


def test_fuzz_csv(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["fuzz", "R2R", "--trials", "10", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert [float(r["alpha"]) for r in rows] == pytest.approx([0, math.pi / 6, math.pi / 4, math.pi / 3])
    assert all(r["trials"] == "10" and r["violations"] == "0" and r["n"] == "2-6" for r in rows)


def test_fuzz_jobs_do_not_change_output(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    common = ["fuzz", "CD-CONTRACT", "INV-SEC", "--trials", "60", "--seed", "3"]
    assert main(common + ["--out", str(a)]) == 0
    assert main(common + ["--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 2 * 4 * 60


def test_fuzz_fixed_alpha_and_options(tmp_path):
    out = tmp_path / "l.jsonl"
    args = ["fuzz", "LOGMEAN-COR", "--trials", "5", "--alpha", "0.4", "--t", "0.25", "--logmean-literal",
            "--n", "3", "--out", str(out)]
    main(args)
    recs = [json.loads(x) for x in out.read_text().splitlines()]
    assert len(recs) == 5
    assert all(r["alpha"] == 0.4 and r["n"] == 3 and r["params"]["t"] == 0.25 for r in recs)


def test_sharpness(capsys):
    assert main(["sharpness", "INV-SEC", "--trials", "20", "--alpha", "0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["max_ratio"] == pytest.approx(1.0, abs=1e-8)
    assert rec["trials"] == 20 and rec["n"] == 4


def test_module_entry_point(tmp_path):
    out = tmp_path / "g.json"
    proc = subprocess.run(
        [sys.executable, "-m", "accretive", "gen", "--n", "2", "--alpha", "0.2", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert load_matrix(out).shape == (2, 2)
