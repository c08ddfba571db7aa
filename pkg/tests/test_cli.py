import json
from pathlib import Path

import jsonschema
import pytest

from ncgraded.cli import emit, main, roundtrip

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "docs" / "report.schema.json").read_text())
REPORT_COMMANDS = [
    ["classify", "1", "1", "1"],
    ["classify", "1", "w", "w^2"],
    ["classify", "1", "2", "3"],
    ["hilbert"],
    ["ufnarovskii"],
    ["veronese"],
    ["twist"],
    ["k0"],
    ["mckay"],
    ["mckay", "--order", "4", "--weights", "1,3"],
    ["points", "--maxdeg", "5"],
]


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", REPORT_COMMANDS, ids=" ".join)
def test_reports_pass_and_match_schema(capsys, argv):
    code, out, _ = run(capsys, argv + ["--json"])
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert all(r["status"] == "pass" for r in doc["results"])
    assert roundtrip(out) == out
    code2, out2, _ = run(capsys, argv + ["--json"])
    assert (code2, out2) == (code, out)


def test_verify_all(capsys):
    code, out, _ = run(capsys, ["verify-all", "--json", "--strict"])
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    statuses = {r["status"] for r in doc["results"]}
    assert statuses == {"pass", "info"}
    names = [r["name"] for r in doc["results"]]
    assert len(names) == len(set(names))
    for prefix in ("sklyanin/", "twist/", "hilbert/", "quiver/", "hom/", "veronese/", "mckay/", "k0/",
                   "splitting/", "points/"):
        assert any(n.startswith(prefix) for n in names), prefix


def test_info_entries_only_when_strict(capsys):
    _, plain, _ = run(capsys, ["k0", "--json"])
    _, strict, _ = run(capsys, ["k0", "--json", "--strict"])
    assert all(r["status"] != "info" for r in json.loads(plain)["results"])
    assert any(r["status"] == "info" for r in json.loads(strict)["results"])


def test_fault_injection_fails_only_target(capsys):
    target = "twist/A'-by-cyclic"
    code, out, _ = run(capsys, ["twist", "--json", "--inject-fault", target])
    assert code == 1
    results = json.loads(out)["results"]
    failed = [r["name"] for r in results if r["status"] == "fail"]
    assert failed == [target]


def test_text_output(capsys):
    code, out, _ = run(capsys, ["twist"])
    assert code == 0
    lines = out.splitlines()
    assert all(ln.startswith("PASS  ") for ln in lines[:-1])
    assert lines[-1] == "2 passed, 0 failed"


def test_classify_examples(capsys):
    cases = {("1", "1", "1"): "DegenerateA", ("1", "w", "1"): "DegenerateAPrime",
             ("1", "2", "3"): "NonDegenerate", ("0", "0", "5"): "DegenerateA"}
    for args, tag in cases.items():
        _, out, _ = run(capsys, ["classify", *args, "--json"])
        entry = next(r for r in json.loads(out)["results"] if r["name"] == "classify/family")
        assert entry["computed"] == tag


def test_bad_input_exit_two(capsys):
    code, _, err = run(capsys, ["classify", "1", "(1+", "1"])
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, ["classify", "0", "0", "0"])
    assert code == 2
    code, _, _ = run(capsys, ["hilbert", "/nonexistent/file.txt"])
    assert code == 2
    code, _, err = run(capsys, ["emit", "nope"])
    assert code == 2 and "unknown selector" in err
    code, _, _ = run(capsys, ["twist", "--dot"])
    assert code == 2


def test_hilbert_of_file(capsys, tmp_path):
    f = tmp_path / "dual.txt"
    f.write_text("gens: x\nrel: x*x\n")
    code, out, _ = run(capsys, ["hilbert", str(f), "--json", "--maxdeg", "4"])
    assert code == 0
    entry = next(r for r in json.loads(out)["results"] if r["name"].endswith("/series"))
    assert entry["computed"] == "1 + t"
    nonmono = tmp_path / "s.txt"
    nonmono.write_text("gens: x y\nrel: x*y - y*x\n")
    assert run(capsys, ["hilbert", str(nonmono)])[0] == 2


def test_ufnarovskii_file_and_emit(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("gens: u v w\nrel: u*u\nrel: v*v\nrel: w*w\n")
    code, out, _ = run(capsys, ["ufnarovskii", str(f), "--dot"])
    assert code == 0 and out.startswith("digraph ufnarovskii {")
    assert emit("ufnarovskii", "dot", str(f)) == out
    js = json.loads(emit("ufnarovskii", "json", str(f)))
    assert js["adjacency"] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_emit_selectors(capsys):
    dot_q = emit("quiver-Q")
    assert dot_q.count("->") == 6 and dot_q.count("[label=") == 9
    assert json.loads(emit("quiver-Qprime", "json"))["adjacency"] == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert emit("bratteli", levels=3).count("rank=same") == 4
    assert json.loads(emit("bratteli", "json"))["levels"][2] == [4, 4, 4]
    assert emit("successor-automaton").count("shape=") == 6
    assert json.loads(emit("special-sequences", n=3))["count"] == 24
    code, out, _ = run(capsys, ["emit", "quiver-Q"])
    assert code == 0 and out == dot_q


def test_dot_flags(capsys):
    code, out, _ = run(capsys, ["veronese", "--dot"])
    assert code == 0 and out.count("->") == 24
    code, out, _ = run(capsys, ["mckay", "--dot"])
    assert code == 0 and out.count("->") == 6
    code, out, _ = run(capsys, ["k0", "--dot"])
    assert code == 0 and out.startswith("graph ")


def test_maxdeg_env_override(capsys, monkeypatch):
    monkeypatch.setenv("NCGRADED_MAXDEG", "5")
    _, out, _ = run(capsys, ["hilbert", "--json"])
    doc = json.loads(out)
    assert doc["inputs"]["maxdeg"] == 5
    entry = next(r for r in doc["results"] if r["name"] == "hilbert/A/series-coefficients")
    assert entry["computed"] == [1, 3, 6, 12, 24, 48]
    _, out, _ = run(capsys, ["hilbert", "--json", "--maxdeg", "3"])
    assert json.loads(out)["inputs"]["maxdeg"] == 3
    monkeypatch.setenv("NCGRADED_MAXDEG", "lots")
    assert run(capsys, ["hilbert"])[0] == 2
