import json
import subprocess
import sys

import numpy as np
import pytest

from pacecode import gf3
from pacecode.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_golay(capsys):
    code, out, _ = run(capsys, "build", "--golay")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "6 12"
    assert lines[1] == "1 0 0 0 0 0 0 1 1 1 1 1"
    assert out.endswith("\n")


def test_build_m12_and_design_forms(capsys):
    code, out, _ = run(capsys, "build", "--construction", "m12")
    assert code == 0
    m12 = gf3.parse_matrix(out)
    assert m12.shape == (10, 66) and gf3.mat_rank(m12) == 10
    code, out, _ = run(capsys, "build", "--construction", "design", "--A", "12", "--B", "11")
    design = gf3.parse_matrix(out)
    assert design.shape == (10, 66)
    assert gf3.LinearCode(design).weight_distribution() == gf3.LinearCode(m12).weight_distribution()


def test_build_design_swapped_roles_matches_monomial_image(capsys):
    from pacecode.design_code import equivalence_map_prop5
    from pacecode.zmodule import pace_generator_m12

    _, out, _ = run(capsys, "build", "--construction", "design", "--A", "11", "--B", "12")
    pg = pace_generator_m12()
    assert np.array_equal(gf3.parse_matrix(out), equivalence_map_prop5(pg.matrix, pg.manifest))


def test_build_json_and_manifest(capsys):
    _, out, _ = run(capsys, "build", "--format", "json")
    obj = json.loads(out)
    assert (obj["rows"], obj["cols"]) == (10, 66)
    _, out, _ = run(capsys, "build", "--manifest", "--format", "json")
    manifest = json.loads(out)
    assert len(manifest) == 66 and manifest[0] == {"column": 0, "block": [1, 2, 3, 4, 6, 11]}


def test_build_to_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "build", "--golay", "-o", str(path))
    assert code == 0 and out == ""
    assert gf3.parse_matrix(path.read_text()).shape == (6, 12)


def test_unwritable_path(tmp_path, capsys):
    code, _, err = run(capsys, "build", "--golay", "-o", str(tmp_path / "missing" / "g.txt"))
    assert code == 1
    assert "I/O error" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--golay", "--construction", "m12"],
        ["build", "--construction", "m12", "--A", "12"],
        ["build", "--construction", "design", "--A", "1,2", "--B", "2"],
    ],
)
def test_bad_flag_combinations(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_unknown_flags_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["weights", "--code", "hamming"])
    assert exc.value.code == 2


def test_design_export(capsys):
    _, out, _ = run(capsys, "design", "--format", "json")
    blocks = json.loads(out)
    assert len(blocks) == 132
    assert blocks[0] == [1, 2, 3, 4, 5, 12]
    assert blocks == sorted(blocks)
    _, out, _ = run(capsys, "design", "--info-sets")
    assert len(out.splitlines()) == 792
    assert out.splitlines()[0] == "1 2 3 4 5 6"


def test_design_export_matches_golden(capsys, golden_blocks):
    _, out, _ = run(capsys, "design")
    assert [tuple(map(int, ln.split())) for ln in out.splitlines()] == golden_blocks


def test_weights(capsys):
    _, out, _ = run(capsys, "weights", "--code", "golay")
    assert out == "0 1\n6 264\n9 440\n12 24\n"
    _, out, _ = run(capsys, "weights", "--code", "pace", "--format", "json")
    obj = json.loads(out)
    assert obj["schema_version"] == 1
    weights = {int(w): c for w, c in obj["weights"].items()}
    assert min(w for w in weights if w) == 36
    assert all(w % 3 == 0 for w in weights)
    assert sum(weights.values()) == 3**10


def test_output_is_deterministic_across_threads(capsys):
    _, a, _ = run(capsys, "weights", "--code", "pace")
    _, b, _ = run(capsys, "weights", "--code", "pace", "--threads", "4")
    assert a == b


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("PACECODE_THREADS", "2")
    code, out, _ = run(capsys, "weights", "--code", "golay")
    assert code == 0 and out.startswith("0 1\n")
    monkeypatch.setenv("PACECODE_THREADS", "two")
    code, _, _ = run(capsys, "weights", "--code", "golay")
    assert code == 2


def test_orbits(capsys):
    _, out, _ = run(capsys, "orbits", "--format", "json")
    obj = json.loads(out)
    assert obj["group_order"] == 95040
    assert [(o["length"], o["stabilizer"]) for o in obj["orbits"]] == [(132, 720), (792, 120), (66, 1440), (66, 1440)]


def test_verify_group_json(capsys):
    code, out, _ = run(capsys, "verify", "--group", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert all(set(r) == {"check", "expected", "actual", "pass"} for r in reports)
    assert all(r["pass"] for r in reports)
    assert any(r["check"] == "sharply 5-transitive" for r in reports)


def test_verify_lemmas_text(capsys):
    code, out, _ = run(capsys, "verify", "--lemmas")
    assert code == 0
    assert "FAIL" not in out
    assert "i(2,1)" in out


def test_verify_failure_exit_status(monkeypatch, capsys):
    from pacecode import verifier

    monkeypatch.setitem(verifier.SUITES, "cases", [lambda: [verifier.VerificationReport("bad", "1", "2", False)]])
    code, out, _ = run(capsys, "verify", "--cases")
    assert code == 1
    assert out.startswith("FAIL")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pacecode", "build", "--golay"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("6 12\n")


@pytest.mark.slow
def test_verify_all_is_green(capsys):
    code, out, _ = run(capsys, "verify", "--all")
    assert code == 0
    assert "FAIL" not in out
