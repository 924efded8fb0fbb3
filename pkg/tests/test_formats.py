import json
from fractions import Fraction

import pytest

from helixspan.formats import (
    LIMIT_HEADER,
    TABLE_HEADER,
    decimal_string,
    histogram_to_csv,
    limit_to_csv,
    limit_to_json,
    read_csv_rows,
    table_to_csv,
    table_to_json,
    write_atomic,
)
from helixspan.limitlaw import q_series
from helixspan.oracle import histogram
from helixspan.tables import distance_table


@pytest.mark.parametrize(
    "value, digits, text",
    [(Fraction(1, 3), 5, "0.33333"), (Fraction(2, 3), 3, "0.667"), (100, 12, "100"), (Fraction(1, 8), 12, "0.125")],
)
def test_decimal_string(value, digits, text):
    assert decimal_string(value, digits) == text


def test_table_csv_and_json_agree():
    table = distance_table(1, 12)
    header, rows = read_csv_rows(table_to_csv(table))
    assert header == TABLE_HEADER
    data = json.loads(table_to_json(table))
    assert data["r"] == 1 and data["N"] == 12
    assert [(int(r[1]), int(r[2]), r[3]) for r in rows] == [(x["n"], x["d"], x["w"]) for x in data["rows"]]
    assert all(float(r[4]) == x["p"] for r, x in zip(rows, data["rows"]))
    # zero counts are omitted
    assert all(int(r[3]) > 0 for r in rows)


def test_counts_written_exactly():
    table = distance_table(1, 300, d_max=3)
    _, rows = read_csv_rows(table_to_csv(table))
    big = [r for r in rows if r[1] == "300" and r[2] == "1"][0]
    assert int(big[3]) == table.w(300, 1)
    assert len(big[3]) > 40


def test_histogram_csv_matches_table():
    hist = histogram(10)
    table = distance_table(1, 10)
    _, hrows = read_csv_rows(histogram_to_csv(hist))
    _, trows = read_csv_rows(table_to_csv(table))
    assert hrows == [r for r in trows if r[1] == "10"]


def test_limit_outputs():
    law = q_series(10)
    text = limit_to_csv(law)
    header, rows = read_csv_rows(text)
    assert header == LIMIT_HEADER
    assert rows[0][:2] == ["1", "7/2-3/2*sqrt5"]
    footer = [line for line in text.splitlines() if line.startswith("#")]
    keys = [line[2:].split("=")[0] for line in footer]
    assert keys == ["rho", "inv_rho", "delta", "inv_delta"]
    assert footer[2].startswith("# delta=1.40244778")
    data = json.loads(limit_to_json(law))
    assert [row["q_exact"] for row in data["rows"]] == [r[1] for r in rows]
    assert data["constants"]["inv_delta"].startswith("0.713039")


def test_read_csv_rows_skips_comments():
    assert read_csv_rows("# hi\na,b\n1,2\n# tail\n") == (["a", "b"], [["1", "2"]])
    assert read_csv_rows("") == ([], [])


def test_write_atomic(tmp_path):
    target = tmp_path / "out.csv"
    write_atomic(target, "first\n")
    write_atomic(target, "second\n")
    assert target.read_text() == "second\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.csv"]
