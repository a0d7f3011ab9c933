import json
import os
import subprocess
import sys

import pytest

from conftest import CORPUS

from sqci.cli import main


def corpus(name):
    return os.path.join(CORPUS, name + ".graph")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_round_trip(capsys):
    code, out = run(capsys, "parse", corpus("p4"))
    assert code == 0
    with open(corpus("p4")) as fh:
        assert out == fh.read()


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("v a\ne a missing_vertex\n")
    assert main(["parse", str(bad)]) == 2


def test_missing_file_exit_code():
    assert main(["d2", "/nonexistent.graph"]) == 2


def test_unknown_verb_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", corpus("p4")])
    assert exc.value.code == 2


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit):
        main(["d2", corpus("p4"), "--bogus"])


def test_d2_json_deterministic(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["d2", corpus("c5"), "--out", str(out1)]) == 0
    assert main(["d2", corpus("c5"), "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    payload = json.loads(out1.read_text())
    assert payload["vertices"] == 20


def test_ri_writes_dot(tmp_path, capsys):
    dot = tmp_path / "ri.dot"
    assert main(["ri", "--braid", corpus("o3"), "--dot", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith(("graph", "strict graph"))
    assert "u0" in text


def test_classify_exit_codes(capsys):
    assert main(["classify", "--pb2", corpus("o3"),
                 "--raag", corpus("p4")]) == 0
    assert main(["classify", "--pb2", corpus("o_prime_4"),
                 "--raag", corpus("p4")]) == 3
    # usage error: only one group
    assert main(["classify", "--raag", corpus("p4")]) == 1


def test_semiiso_exit_codes(capsys):
    assert main(["semiiso", "--raag", corpus("c5"),
                 "--raag", corpus("c5")]) == 0
    assert main(["semiiso", "--raag", corpus("c5"),
                 "--raag", corpus("c6")]) == 3


def test_npc_pass(capsys):
    assert main(["npc", corpus("p4")]) == 0


def test_joinlen(capsys):
    code, out = run(capsys, "joinlen", corpus("p4"), "a0 a3")
    assert code == 0
    payload = json.loads(out)
    assert payload["join_length"] == 2
    assert payload["factorization"] == ["a0", "a3"]


def test_validate_clean(capsys):
    assert main(["validate", "--braid", corpus("o_prime_4_1")]) == 0


def test_sweep_empty_dir(tmp_path, capsys):
    assert main(["sweep", str(tmp_path)]) == 0


def test_sweep_corpus(capsys):
    code, out = run(capsys, "sweep", CORPUS)
    assert code == 0
    payload = json.loads(out)
    assert payload["errors"] == {}
    assert all(v["agree"] for v in payload["betti1_agreement"].values())


def test_cap_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SQCI_CAP", "5")
    assert main(["ball", "--raag", corpus("p4"),
                 "--radius", "2", "--word-bound", "3"]) == 2


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "sqci.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "sqci" in proc.stdout
