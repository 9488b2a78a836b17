import json

import pytest

from hpascal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_counts_closed(capsys):
    code, out, _ = run(capsys, "counts", "--q", "5", "--n", "3", "--method", "closed")
    assert code == 0
    assert out == "a=2 b=1 s=5\n"


def test_counts_json(capsys):
    code, out, _ = run(capsys, "counts", "--q", "6", "--n", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"q": 6, "n": 4, "a": "5", "b": "10", "s": "17"}


def test_counts_cross_check(capsys):
    code, out, _ = run(capsys, "counts", "--q", "5", "--n", "6", "--cross-check")
    assert code == 0
    assert "cross-check: OK" in out


def test_counts_closed_rejects_q4(capsys):
    code, _, err = run(capsys, "counts", "--q", "4", "--n", "3", "--method", "closed")
    assert code == 2
    assert "closed form" in err


def test_sums_output(capsys):
    code, out, _ = run(capsys, "sums", "--q", "5", "--n", "4")
    assert code == 0
    assert out == "sumA=18 sumB=10 sum=30\n"


def test_altsum(capsys):
    code, out, _ = run(capsys, "altsum", "--n", "7")
    assert code == 0
    assert out == "0\n"


def test_altsum_weighted_cross_check(capsys):
    code, out, _ = run(
        capsys, "altsum", "--n", "3", "--weights", "2", "3", "--cross-check"
    )
    assert code == 0
    assert "formula: 26" in out
    assert "cross-check: OK" in out


def test_rows_csv(capsys):
    code, out, _ = run(capsys, "rows", "--q", "5", "--n-max", "3")
    assert code == 0
    assert out == "1\n1,1\n1,2,1\n1,3,2,3,1\n"


def test_rows_json(capsys):
    code, out, _ = run(capsys, "rows", "--q", "5", "--n-max", "2", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[2]["kinds"] == ["W", "A", "W"]


def test_rows_dot(capsys):
    code, out, _ = run(capsys, "rows", "--q", "5", "--n-max", "2", "--format", "dot")
    assert code == 0
    assert out.count("label=") == 6
    assert "n1_0 -> n2_1;" in out


def test_rows_budget_exceeded(capsys):
    code, _, err = run(capsys, "rows", "--q", "5", "--n-max", "20", "--budget", "100")
    assert code == 3
    assert "row 7" in err


def test_pattern_phi(capsys):
    code, out, _ = run(capsys, "pattern", "--n", "3")
    assert code == 0
    assert out == "21\n10101\n"


def test_pattern_check_report(capsys):
    code, out, _ = run(capsys, "pattern", "--n", "3", "--check", "prefix")
    assert code == 0
    assert json.loads(out) == {"n": 3, "check": "prefix", "pass": True}


def test_locate(capsys):
    code, out, _ = run(capsys, "locate", "--u", "3", "--v", "5")
    assert code == 0
    loc = json.loads(out)
    assert loc["row"] == 4
    assert loc["col"] == 2
    assert loc["verified"] == "full-row"
    assert sum(step["descend"] for step in loc["trace"]) == 4


def test_locate_symbolic_when_over_budget(capsys):
    code, out, _ = run(
        capsys, "locate", "--u", "1000000", "--v", "1000001", "--budget", "1000"
    )
    assert code == 0
    loc = json.loads(out)
    assert loc["col"] == "symbolic"
    assert loc["verified"] == "unverified"


def test_embed(capsys):
    code, out, _ = run(
        capsys, "embed", "--f0", "1", "--f1", "2", "--eta", "2", "--terms", "3"
    )
    assert code == 0
    rows = [json.loads(line)["row"] for line in out.splitlines()]
    assert rows == [2, 4, 6]


def test_eliminate(capsys):
    code, out, _ = run(
        capsys,
        "eliminate",
        "--a1", "1", "--b1", "1", "--c1", "1",
        "--a2", "1", "--b2", "2", "--c2", "0",
    )
    assert code == 0
    assert out == "ternary: 4 -4 1\n"


def test_eliminate_homogeneous_fractions(capsys):
    code, out, _ = run(
        capsys,
        "eliminate",
        "--a1", "3/2", "--b1", "1", "--c1", "0",
        "--a2", "2", "--b2", "1/2", "--c2", "0",
    )
    assert code == 0
    assert "ternary: 3 -3/4 -5/4\n" in out
    assert "binary: 2 5/4" in out


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "euclidean-oracle", "elimination")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all(line.startswith("PASS") for line in lines)


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["rows", "--q", "not-a-number", "--n-max", "3"])
    assert exc_info.value.code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "rows", "--q", "6", "--n-max", "5", "--format", "json")
    second = run(capsys, "rows", "--q", "6", "--n-max", "5", "--format", "json")
    assert first == second


def test_output_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code = main(["rows", "--q", "5", "--n-max", "2", "-o", str(target)])
    assert code == 0
    assert target.read_text() == "1\n1,1\n1,2,1\n"
