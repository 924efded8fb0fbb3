import csv
import io
import json

import pytest

from helixspan.cli import main
from helixspan.formats import read_csv_rows
from helixspan.oracle import enumerate_dot_brackets


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_positional(capsys):
    code, out, _ = run(capsys, "dist", "((...))..(...)", "......")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["distance"] for r in rows] == ["5", "5"]
    assert rows[0]["distance"] == rows[0]["distance_tableau"]
    assert rows[0]["irreducibles"] == "2" and rows[0]["isolated"] == "2"
    assert rows[0]["min_stack"] == "1" and rows[1]["min_stack"] == ""


def test_dist_file_with_errors(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("> header\n(((...)))\n\n((...)\n(.)x\n")
    code, out, err = run(capsys, "dist", "--in", str(f), "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert [r["line"] for r in records] == [2]
    assert "line 4: UnbalancedBrackets" in err
    assert "line 5: InvalidCharacter" in err
    code, _, _ = run(capsys, "dist", "--in", str(f), "--strict")
    assert code == 2


def test_dist_without_input(capsys):
    code, _, err = run(capsys, "dist")
    assert code == 2 and "no structures" in err


def test_table_small(capsys):
    code, out, _ = run(capsys, "table", "--N", "3")
    assert code == 0
    header, rows = read_csv_rows(out)
    assert header == ["r", "n", "d", "w", "p"]
    assert rows == [["1", "1", "0", "1", "1"], ["1", "2", "1", "1", "1"], ["1", "3", "1", "1", "0.5"], ["1", "3", "2", "1", "0.5"]]


def test_table_json_to_file(tmp_path, capsys):
    out = tmp_path / "t.json"
    code, stdout, _ = run(capsys, "table", "--N", "30", "--r", "2", "--d-max", "5", "--format", "json", "--out", str(out))
    assert code == 0 and stdout == ""
    data = json.loads(out.read_text())
    assert data["r"] == 2 and max(row["d"] for row in data["rows"]) == 5


def test_table_cap_and_validation(capsys):
    assert run(capsys, "table", "--N", "6000")[0] == 2
    assert run(capsys, "table", "--N", "10", "--cap", "5")[0] == 2
    assert run(capsys, "table", "--N", "0")[0] == 2
    assert run(capsys, "table", "--r", "0")[0] == 2
    assert run(capsys, "table", "--N", "5", "--precision-bits", "20")[0] == 2


def test_env_defaults_and_precedence(monkeypatch, capsys):
    monkeypatch.setenv("HELIXSPAN_N", "4")
    monkeypatch.setenv("HELIXSPAN_FORMAT", "json")
    code, out, _ = run(capsys, "table")
    assert code == 0 and json.loads(out)["N"] == 4
    code, out, _ = run(capsys, "table", "--N", "2", "--format", "csv")
    assert out.startswith("r,n,d,w,p")
    monkeypatch.setenv("HELIXSPAN_N", "many")
    assert run(capsys, "table")[0] == 2


def test_limit(capsys):
    code, out, _ = run(capsys, "limit", "--d-max", "5")
    assert code == 0
    header, rows = read_csv_rows(out)
    assert header == ["d", "q_exact", "q_decimal"]
    assert rows[1][1] == "18-8*sqrt5"
    assert len(rows) == 5
    assert "# delta=" in out
    assert run(capsys, "limit", "--d-max", "0")[0] == 2


def test_check_small_passes(capsys):
    code, out, _ = run(capsys, "check", "--n", "9", "--r", "1,2", "--growth-n", "400", "--tail-d", "40")
    report = json.loads(out)
    names = {s["check"] for s in report["suites"]}
    assert {"bijection", "oracle_equality", "row_sums", "limit_exact", "tail_ratio"} <= names
    failing = [s["check"] for s in report["suites"] if not s["passed"]]
    # only the growth suite can miss its absolute tolerance at this size
    assert set(failing) <= {"growth_rate"}
    assert code == (0 if not failing else 1)


def test_check_bad_r_list(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--r", "1,x"])
    assert exc.value.code == 2


def test_compare_exact(tmp_path, capsys):
    f = tmp_path / "all10.db"
    f.write_text("\n".join(enumerate_dot_brackets(10)) + "\n")
    code, out, err = run(capsys, "compare", "--in", str(f))
    assert code == 0
    header, rows = read_csv_rows(out)
    assert header == ["d", "empirical", "reference", "difference"]
    assert all(float(r[3]) == 0 for r in rows)
    assert "exact-n" in err


def test_compare_limit_json(tmp_path, capsys):
    f = tmp_path / "mixed.db"
    f.write_text("((...))\n(((....)))..\n" + "." * 20 + "\n")
    code, out, _ = run(capsys, "compare", "--in", str(f), "--format", "json", "--d-max", "25")
    data = json.loads(out)
    assert data["reference"] == "limit" and data["sample_size"] == 3
    assert len(data["rows"]) == 26


def test_compare_strict(tmp_path, capsys):
    f = tmp_path / "bad.db"
    f.write_text("(...)\n(((\n")
    assert run(capsys, "compare", "--in", str(f))[0] == 0
    assert run(capsys, "compare", "--in", str(f), "--strict")[0] == 2
    assert run(capsys, "compare", "--in", str(tmp_path / "missing"))[0] == 2


def test_plot(tmp_path, capsys):
    table, limit, svg = tmp_path / "t.csv", tmp_path / "q.csv", tmp_path / "p.svg"
    run(capsys, "table", "--N", "40", "--out", str(table))
    run(capsys, "limit", "--out", str(limit))
    code, _, _ = run(capsys, "plot", "--in", str(table), "--in", str(limit), "--out", str(svg))
    assert code == 0
    first = svg.read_bytes()
    run(capsys, "plot", "--in", str(table), "--in", str(limit), "--out", str(svg))
    assert svg.read_bytes() == first
    bogus = tmp_path / "x.csv"
    bogus.write_text("a,b\n1,2\n")
    assert run(capsys, "plot", "--in", str(bogus))[0] == 2


def test_dist_small_examples(capsys):
    code, out, _ = run(capsys, "dist", "((...))", ".")
    assert code == 0
    first, second = csv.DictReader(io.StringIO(out))
    assert (first["distance"], first["irreducibles"], first["isolated"], first["min_stack"]) == ("1", "1", "0", "2")
    assert second["distance"] == "0"


def test_limit_partial_sums_below_one(capsys):
    _, out, _ = run(capsys, "limit", "--d-max", "60")
    _, rows = read_csv_rows(out)
    total = 0.0
    for row in rows:
        total += float(row[2])
        assert total < 1
