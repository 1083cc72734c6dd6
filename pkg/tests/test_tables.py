from pathlib import Path

import pytest

from unicas.exact import Polynomial
from unicas.verify import build_table, render_csv, render_text
from unicas.verify.tables import family_casimir_polynomial, universal_casimir_form

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("table_id", [1, 2, 3, 4, 5, 6])
def test_golden_rendering(table_id):
    expected = (GOLDEN / f"table{table_id}.txt").read_text()
    assert render_text(build_table(table_id)) + "\n" == expected


def test_unknown_table_id():
    with pytest.raises(ValueError):
        build_table(7)
    with pytest.raises(ValueError):
        build_table(0)


def test_table1_e8_row():
    table = build_table(1)
    row = next(r for r in table.rows if r[0] == "E8")
    assert row[2:] == ("-2", "12", "20", "30")


def test_table5_f4_row_both_groups():
    table = build_table(5)
    row = next(r for r in table.rows if r[0] == "F4")
    # linear forms in a and the scaled universal values must agree cellwise
    assert row[2:5] == row[6:9]
    assert row[2:5] == ("14/3", "10/3", "44/9")


def test_table5_groups_agree_for_all_rows():
    table = build_table(5)
    for row in table.rows:
        assert row[2:5] == row[6:9]


def test_table6_rows():
    table = build_table(6)
    assert table.rows[0][3:] == ("16*n - 16", "8*n - 8")
    assert table.rows[1][3:] == ("16*n + 16", "4*n + 4")


def test_table4_universal_row_is_generated():
    table = build_table(4)
    row = next(r for r in table.rows if r[0] == "universal")
    assert row[1] == str(universal_casimir_form())


def test_family_interpolation_matches_known_rows():
    k, n, N = Polynomial.var("k"), Polynomial.var("n"), Polynomial.var("N")
    assert family_casimir_polynomial("A") == (
        6 * k**2 + k * (4 * N - 2) + 2 * n * (n + N) + 6 * k * n
    )
    assert family_casimir_polynomial("D") == (
        6 * k**2 + k * (8 * N - 14) + 2 * n * (n + 2 * N - 3) + 6 * k * n
    )


def test_csv_rendering_round_trips():
    import csv
    import io

    table = build_table(6)
    parsed = list(csv.reader(io.StringIO(render_csv(table))))
    assert parsed[0] == list(table.columns)
    assert tuple(parsed[1]) == table.rows[0]
