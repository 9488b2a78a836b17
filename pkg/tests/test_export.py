import io
import json

from hpascal.export import row_as_json, write_csv, write_dot, write_json
from hpascal.triangle import generate_rows


def test_csv_rows():
    buf = io.StringIO()
    write_csv(generate_rows(5, 3), buf)
    assert buf.getvalue() == "1\n1,1\n1,2,1\n1,3,2,3,1\n"


def test_json_rows_are_decimal_strings():
    buf = io.StringIO()
    write_json(generate_rows(5, 3), buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 4
    row3 = json.loads(lines[3])
    assert row3 == {
        "n": 3,
        "values": ["1", "3", "2", "3", "1"],
        "kinds": ["W", "A", "B", "A", "W"],
    }
    assert all(isinstance(v, str) for v in row3["values"])


def test_row_as_json_row0():
    row = next(iter(generate_rows(5, 0)))
    assert row_as_json(row) == {"n": 0, "values": ["1"], "kinds": ["W"]}


def test_dot_vertex_and_edge_counts():
    buf = io.StringIO()
    write_dot(5, 5, buf)
    text = buf.getvalue()
    lines = text.splitlines()
    node_lines = [ln for ln in lines if "label=" in ln]
    edge_lines = [ln for ln in lines if "->" in ln]
    assert len(node_lines) == 1 + 2 + 3 + 5 + 10 + 23  # row sizes 0..5
    # one edge per downward slot: wingers 2, kind A 3, kind B 4 (q = 5)
    assert len(edge_lines) == 2 + 4 + 7 + 14 + 32
    assert sum("shape=ellipse" in ln for ln in node_lines) == 0 + 0 + 1 + 2 + 4 + 9
    assert sum("shape=box" in ln for ln in node_lines) == 44 - 16
    assert text.startswith("digraph triangle {")
    assert text.endswith("}\n")


def test_dot_is_deterministic():
    first, second = io.StringIO(), io.StringIO()
    write_dot(5, 4, first)
    write_dot(5, 4, second)
    assert first.getvalue() == second.getvalue()
