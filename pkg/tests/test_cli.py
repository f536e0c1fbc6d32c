import json

import pytest

from squiral import cli, config
from squiral.sequences import TABLE1


@pytest.fixture(autouse=True)
def restore_limits(monkeypatch):
    saved = config.limits
    monkeypatch.delenv("SQUIRAL_MAX_LEVEL", raising=False)
    monkeypatch.delenv("SQUIRAL_MEM_BUDGET", raising=False)
    yield
    config.limits = saved


def run(capsysbinary, *argv):
    code = cli.main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out, err


def test_supertile_text(capsysbinary):
    code, out, _ = run(capsysbinary, "supertile", "--n", "1", "--format", "text")
    assert code == 0
    assert out == b"101\n000\n101\n"
    assert run(capsysbinary, "supertile", "--n", "0")[1] == b"0\n"


def test_supertile_plain_pbm(capsysbinary):
    code, out, _ = run(capsysbinary, "supertile", "--n", "2", "--format", "pbm")
    assert code == 0
    lines = out.decode().splitlines()
    assert lines[:2] == ["P1", "9 9"]
    assert lines[2:] == [
        "010101010", "111000111", "010101010",
        "101101101", "000000000", "101101101",
        "010101010", "111000111", "010101010",
    ]


def test_supertile_raw_pbm(capsysbinary):
    code, out, _ = run(capsysbinary, "supertile", "--n", "1", "--format", "pbm", "--raw")
    assert code == 0
    assert out == b"P4\n3 3\n" + bytes([0b10100000, 0b00000000, 0b10100000])


def test_supertile_long_rows_wrap(capsysbinary):
    _, out, _ = run(capsysbinary, "supertile", "--n", "4", "--format", "pbm")
    body = out.decode().splitlines()[2:]
    assert max(map(len, body)) <= 70
    assert "".join(body) == "".join(
        run(capsysbinary, "supertile", "--n", "4")[1].decode().split()
    )


def test_supertile_budget(capsysbinary):
    code, out, err = run(capsysbinary, "supertile", "--n", "5", "--max-level", "4")
    assert code == 3 and out == b""
    assert b"error" in err


def test_count_all_agrees(capsysbinary):
    code, out, _ = run(capsysbinary, "count", "--n", "4", "--method", "all")
    assert code == 0
    text = out.decode()
    assert "brute: A=126 B=192 C=192" in text
    assert "closed: A=126" in text and "simplified: A=126" in text
    assert text.rstrip().endswith("all paths agree")


def test_count_brute_and_json(capsysbinary):
    code, out, _ = run(capsysbinary, "count", "--n", "2", "--method", "brute")
    assert (code, out) == (0, b"A=14 B=36 C=36\n")
    code, out, _ = run(capsysbinary, "count", "--n", "245", "--method", "closed", "--format", "json")
    closed = json.loads(out)["paths"]["closed"]["A"]
    _, out, _ = run(capsysbinary, "count", "--n", "245", "--method", "recursion", "--format", "json")
    assert closed == json.loads(out)["paths"]["recursion"]["A"] == 837390


def test_count_huge_values_become_strings(capsysbinary):
    n = str(3**30)
    code, out, _ = run(capsysbinary, "count", "--n", n, "--method", "closed", "--format", "json")
    assert code == 0
    value = json.loads(out)["paths"]["closed"]["A"]
    assert isinstance(value, str) and int(value) > 2**63


def test_count_all_without_certified_brute(capsysbinary):
    code, out, _ = run(capsysbinary, "count", "--n", "10", "--search-level", "3")
    assert code == 0
    assert b"brute: unavailable" in out


def test_count_brute_uncertified_is_resource_error(capsysbinary):
    code, _, err = run(capsysbinary, "count", "--n", "10", "--method", "brute", "--search-level", "3")
    assert code == 3 and b"error" in err


def test_count_disagreement_exit_code(capsysbinary, monkeypatch):
    monkeypatch.setattr(cli, "closed_form_A", lambda n: 0)
    code, out, _ = run(capsysbinary, "count", "--n", "4", "--method", "all")
    assert code == 1
    assert b"DISAGREEMENT" in out


def test_usage_errors(capsysbinary):
    assert run(capsysbinary, "count", "--n", "0")[0] == 2
    assert run(capsysbinary, "sequence", "--max-n", "0")[0] == 2
    assert run(capsysbinary, "supertile", "--n", "1", "--max-level", "13")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "--method", "bogus", "--n", "3"])
    assert exc.value.code == 2


def test_sequence_csv(capsysbinary):
    code, out, _ = run(capsysbinary, "sequence", "--max-n", "10", "--format", "csv")
    assert code == 0
    lines = out.decode().split("\n")
    assert lines[0] == "n,A,B,C" and lines[1] == "1,2,4,4"
    assert lines[1:11] == [f"{t.n},{t.A},{t.B},{t.C}" for t in TABLE1]
    assert lines[11:] == [""]


def test_sequence_json(capsysbinary):
    code, out, _ = run(capsysbinary, "sequence", "--max-n", "1", "--format", "json")
    assert code == 0
    assert out.strip() == b'[{"n":1,"A":2,"B":4,"C":4}]'


def test_verify_table1(capsysbinary, tmp_path):
    summary = tmp_path / "summary.json"
    code, out, _ = run(capsysbinary, "verify", "--suite", "table1", "--summary", str(summary))
    assert code == 0
    lines = out.decode().splitlines()
    assert json.loads(lines[-1])["passed"] is True
    assert json.loads(summary.read_text()) == json.loads(lines[-1])
    assert any("10/10" in line for line in lines)


def test_verify_lemmas_json(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "--suite", "lemmas", "--max-size", "5", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["suite"] == "lemmas" and body["passed"]
    assert all(c["passed"] for c in body["checks"])


def test_verify_failure_exit_code(capsysbinary, monkeypatch):
    import squiral.checks as checks

    real = checks.brute_force_triple
    monkeypatch.setattr(checks, "brute_force_triple", lambda n: real(n + 1) if n == 7 else real(n))
    code, out, _ = run(capsysbinary, "verify", "--suite", "table1", "--format", "json")
    assert code == 1
    body = json.loads(out)
    assert body["passed"] is False
    assert "n=7" in body["checks"][0]["detail"]


def test_env_fallback_and_flag_priority(capsysbinary, monkeypatch):
    monkeypatch.setenv("SQUIRAL_MAX_LEVEL", "3")
    assert run(capsysbinary, "supertile", "--n", "4")[0] == 3
    assert run(capsysbinary, "supertile", "--n", "4", "--max-level", "5")[0] == 0
    monkeypatch.setenv("SQUIRAL_MAX_LEVEL", "oops")
    assert run(capsysbinary, "supertile", "--n", "1")[0] == 2


def test_output_is_deterministic(capsysbinary):
    for argv in (
        ("supertile", "--n", "3", "--format", "pbm", "--raw"),
        ("count", "--n", "7", "--format", "json"),
        ("sequence", "--max-n", "50", "--format", "json"),
    ):
        first = run(capsysbinary, *argv)
        assert run(capsysbinary, *argv) == first
        assert run(capsysbinary, *argv, "--threads", "2") == first


def test_help_for_each_subcommand(capsys):
    for sub in ("supertile", "count", "verify", "sequence"):
        with pytest.raises(SystemExit) as exc:
            cli.main([sub, "--help"])
        assert exc.value.code == 0
        assert "--max-level" in capsys.readouterr().out
