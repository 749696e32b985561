"""Command-line interface: exit codes, dumps, structured output round-trip."""

import json

from qhall.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    assert "krr1" in out and "kawanaka" in out


def test_verify_match_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "krr1", "--k", "2", "--q-order", "40")
    assert code == 0
    assert "match" in out and "q^39" in out


def test_verify_unknown_exit_two(capsys):
    code, _, err = run_cli(capsys, "verify", "nosuch")
    assert code == 2
    assert "catalog" in err


def test_dump_hl(capsys):
    code, out, _ = run_cli(capsys, "dump", "hl", "(1,1)", "3")
    assert code == 0
    assert out.splitlines() == ["0,1,1 : 1", "1,0,1 : 1", "1,1,0 : 1"]
    code, out, _ = run_cli(capsys, "dump", "hl", "()", "2")
    assert code == 0
    assert out.splitlines() == ["0,0 : 1"]
    code, _, _ = run_cli(capsys, "dump", "hl", "(bad", "2")
    assert code == 2


def test_dump_series(capsys):
    code, out, _ = run_cli(capsys, "dump", "series", "rr6-lhs", "--q-order", "10")
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["0"] == "1" and rows["1"] == "1" and "2" not in rows and rows["3"] == "1"
    code, _, _ = run_cli(capsys, "dump", "series", "nosuch")
    assert code == 2


def test_verify_all_quick(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--profile", "quick", "--seed", "7")
    assert code == 0
    from qhall.identities import REGISTRY

    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == len(REGISTRY)
    assert all("match" in l for l in lines)


def test_structured_roundtrip_and_determinism(capsys):
    code, out1, _ = run_cli(
        capsys, "verify-all", "--profile", "quick", "--seed", "7", "--output", "structured"
    )
    assert code == 0
    doc = json.loads(out1)
    assert doc["schema"] == "qhall-report/1"
    assert all(r["status"] == "match" for r in doc["reports"])
    code, out2, _ = run_cli(
        capsys, "verify-all", "--profile", "quick", "--seed", "7", "--output", "structured"
    )
    assert out1 == out2


def test_structured_single(capsys):
    code, out, _ = run_cli(capsys, "verify", "csq-euler", "--output", "structured")
    assert code == 0
    doc = json.loads(out)
    rep = doc["reports"][0]
    assert rep["id"] == "csq-euler" and rep["status"] == "match"


def test_exit_one_on_mismatch(capsys):
    from qhall.cli import _emit_reports
    from qhall.verify import IdentitySpec, VerificationReport, Witness

    fake = VerificationReport(
        IdentitySpec("demo", "q-series"),
        "mismatch",
        "",
        Witness("q^3", "2", "1"),
    )
    assert _emit_reports([fake], "human") == 1
    out = capsys.readouterr().out
    assert "q^3" in out and "mismatch" in out
