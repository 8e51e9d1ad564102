import json
import subprocess
import sys

import pytest

from argex.cli import main


@pytest.fixture
def run(capsys, data_dir, monkeypatch):
    monkeypatch.chdir(data_dir)

    def invoke(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return invoke


def test_nonacc_explanation(run):
    code, out, _ = run("explain", "af1.apx", "--arg", "A", "--mode", "nonacc", "--strategy", "skeptical",
                       "--semantics", "prf", "--depth", "notdef")
    assert code == 0 and out == "{B,D,F}\n"


def test_status_mismatch(run):
    code, out, err = run("explain", "af1.apx", "--arg", "A", "--mode", "acc", "--strategy", "skeptical",
                         "--semantics", "prf", "--depth", "defby")
    assert code == 4 and out == ""
    assert err.count("\n") == 1 and err.startswith("argex: error: StatusMismatch:")


def test_minimal_sufficient(run):
    code, out, _ = run("sufficient", "af2.apx", "--arg", "B", "--mode", "acc", "--minimal", "set")
    assert code == 0 and out == "{A}\n"


def test_json_schema(run):
    code, out, _ = run("explain", "af1.apx", "--arg", "A", "--mode", "acc", "--strategy", "credulous",
                       "--out", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"query", "result", "semantics_independent"}
    assert doc["result"] == {"kind": "candidates", "family": [["C"], ["E", "G"], ["C", "E", "G"]]}
    assert doc["semantics_independent"] is False


def test_pick_first(run):
    code, out, _ = run("explain", "af1.apx", "--arg", "A", "--mode", "acc", "--strategy", "credulous",
                       "--pick", "first")
    assert code == 0 and out == "{C}\n"


def test_minimal_explanation(run):
    _, out, _ = run("explain", "af1.apx", "--arg", "B", "--mode", "nonacc", "--minimal", "set")
    assert out.splitlines() == ["{C}", "{E,G}"]


def test_extensions_and_status(run):
    code, out, _ = run("extensions", "af1.tgf", "--semantics", "stb")
    assert code == 0 and out.splitlines() == ["{A,C,F}", "{B,D,F}", "{A,C,E,G}", "{A,D,E,G}"]
    _, out, _ = run("status", "af1.apx", "--arg", "B", "--strategy", "credulous")
    assert out == "accepted\n"


def test_necessary(run):
    _, out, _ = run("necessary", "af1.apx", "--arg", "B")
    assert out == "{D,F}\n"
    _, out, _ = run("necessary", "af1.apx", "--arg", "B", "--mode", "nonacc")
    assert out == "{}\n"
    code, _, _ = run("necessary", "af1.apx", "--arg", "B", "--mode", "nonacc", "--strategy", "credulous")
    assert code == 4


def test_paths(run):
    _, out, _ = run("paths", "af1.apx", "--from", "F", "--to", "A")
    assert out == "F->E->B->A attack contested B:{C}\n"
    _, out, _ = run("paths", "af1.apx", "--from", "G", "--to", "B", "--out", "json")
    assert json.loads(out)["result"][0]["verdict"] == "uncontested"


def test_gen_and_render(run, tmp_path):
    code, out, _ = run("gen", "--n", "4", "--p", "0.5", "--seed", "1")
    assert code == 0 and out.startswith("arg(a0).")
    path = tmp_path / "g.apx"
    path.write_text(out)
    code, again, _ = run("render", str(path), "--to", "apx")
    assert again == out
    _, dot, _ = run("render", "af1.apx", "--to", "dot")
    assert dot.count("->") == 8


def test_check_small(run):
    code, out, _ = run("check", "--property", "lemma1", "--count", "20")
    assert code == 0 and out.startswith("lemma1:") and out.rstrip().endswith("OK")


def test_check_reports_unrestricted_violations(run, tmp_path):
    path = tmp_path / "c.apx"
    path.write_text("arg(a0). arg(a1). arg(a2). att(a0,a2). att(a1,a0). att(a2,a0). att(a2,a1).")
    code, out, _ = run("check", str(path), "--property", "prop6", "--unrestricted")
    assert code == 0 and "FAIL" in out


@pytest.mark.parametrize("argv, code", [
    (["status", "af1.apx", "--arg", "A", "--bogus"], 1),
    (["explain", "af1.apx", "--arg", "A", "--mode", "acc", "--depth", "notdef"], 1),
    (["explain", "missing.apx", "--arg", "A", "--mode", "acc", "--depth", "notdef"], 1),
    (["sufficient", "af1.apx", "--arg", "A", "--mode", "nonacc", "--strict"], 1),
    (["explain", "af1.apx", "--arg", "A"], 1),
    (["check", "--n", "9"], 1),
    (["gen", "--n", "30", "--p", "0.5"], 1),
    (["status", "missing.apx", "--arg", "A"], 2),
    (["status", "af1.apx", "--arg", "Z"], 3),
    ([], 1),
])
def test_exit_codes(run, argv, code):
    got, out, err = run(*argv)
    assert got == code
    assert err.count("\n") == 1 and err.startswith("argex: error:")


def test_flag_validation_happens_before_reading(run):
    # the depth/mode clash is reported even though the file does not exist
    code, _, err = run("explain", "missing.apx", "--arg", "A", "--mode", "acc", "--depth", "notdef")
    assert code == 1 and "UsageError" in err


def test_parse_error_and_no_extensions(run, tmp_path):
    bad = tmp_path / "bad.apx"
    bad.write_text("arg(a).\natt(a,b).\n")
    assert run("status", str(bad), "--arg", "a")[0] == 2
    odd = tmp_path / "odd.apx"
    odd.write_text("arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a).")
    assert run("status", str(odd), "--arg", "a", "--semantics", "stb")[0] == 5
    assert run("extensions", str(odd), "--semantics", "stb")[0] == 5


def test_too_large(run, tmp_path, monkeypatch):
    monkeypatch.setenv("ARGEX_SUBSET_CAP", "2")
    assert run("sufficient", "af1.apx", "--arg", "A")[0] == 6


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("a\nb\n#\na b\n"))
    assert main(["extensions", "-", "--format", "tgf", "--semantics", "grd"]) == 0
    assert capsys.readouterr().out == "{a}\n"


def test_repeated_runs_are_byte_identical(data_dir):
    cmd = [sys.executable, "-m", "argex", "explain", str(data_dir / "af1.apx"), "--arg", "A",
           "--mode", "acc", "--strategy", "credulous", "--out", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
