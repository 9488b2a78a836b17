import pytest

from hpascal import sequences
from hpascal.triangle import (
    BudgetExceeded,
    Cell,
    NoCentralCell,
    binomial_row,
    cell_at,
    central_cell,
    child_edges,
    generate_rows,
    initial_row,
    largest_row_within,
    next_row,
    nth_row,
    row_cell_count,
    row_counts,
    row_sums,
)

ROW3 = [1, 3, 2, 3, 1]
ROW4 = [1, 4, 3, 5, 2, 2, 5, 3, 4, 1]
ROW5 = [1, 5, 4, 7, 3, 3, 8, 5, 7, 2, 2, 4, 2, 2, 7, 5, 8, 3, 3, 7, 4, 5, 1]


@pytest.mark.parametrize("q", [4, 5, 6, 9])
def test_first_three_rows_are_q_independent(q):
    row = initial_row()
    assert (row.values, row.kinds) == ([1], "W")
    row = next_row(row, q)
    assert (row.values, row.kinds) == ([1, 1], "WW")
    row = next_row(row, q)
    assert (row.values, row.kinds) == ([1, 2, 1], "WAW")


def test_pinned_rows_q5(rows_q5):
    assert rows_q5[3].values == ROW3
    assert rows_q5[3].kinds == "WABAW"
    assert rows_q5[4].values == ROW4
    assert rows_q5[4].kinds == "WABABBABAW"
    assert rows_q5[5].values == ROW5
    assert rows_q5[5].kinds == "WABABBABABBABBABABBABAW"


def test_q4_is_pascals_triangle():
    for row in generate_rows(4, 20):
        assert row.values == binomial_row(row.n)
        assert "B" not in row.kinds


@pytest.mark.parametrize("q", [5, 6, 7])
def test_rows_are_palindromic(q):
    for row in generate_rows(q, 10):
        assert row.values == row.values[::-1]
        assert row.kinds == row.kinds[::-1]


def test_row3_size_is_q():
    for q in range(4, 11):
        assert len(nth_row(q, 3)) == q


def test_row_counts_examples(rows_q5):
    assert row_counts(rows_q5[3]) == (2, 1, 5)
    assert row_counts(rows_q5[2]) == (1, 0, 3)
    assert row_counts(nth_row(7, 3)) == (2, 3, 7)
    with pytest.raises(ValueError):
        row_counts(rows_q5[0])


def test_row_sums_examples(rows_q5):
    assert row_sums(rows_q5[3]) == (6, 2, 10)
    assert row_sums(rows_q5[4]) == (18, 10, 30)
    for q in (4, 5, 8):
        assert row_sums(nth_row(q, 1)) == (0, 0, 2)
    with pytest.raises(ValueError):
        row_sums(rows_q5[0])


@pytest.mark.parametrize("q", range(4, 11))
def test_counts_and_sums_match_coupled_recurrences(q):
    for row in generate_rows(q, 8):
        if row.n < 1:
            continue
        assert row_counts(row) == tuple(sequences.counts_coupled(q, row.n))
        assert row_sums(row) == tuple(sequences.sums_coupled(q, row.n))


def test_adjacency_grammar_q5(rows_q5):
    # inside a row: between two A's only B or BB; between two B's at most one A
    for row in rows_q5[2:13]:
        inner = row.kinds[1:-1]
        a_positions = [i for i, k in enumerate(inner) if k == "A"]
        for left, right in zip(a_positions, a_positions[1:]):
            assert inner[left + 1 : right] in ("B", "BB")
        b_positions = [i for i, k in enumerate(inner) if k == "B"]
        for left, right in zip(b_positions, b_positions[1:]):
            assert inner[left + 1 : right] in ("", "A")


@pytest.mark.parametrize("q", [5, 6])
def test_child_values_come_from_parents(q):
    rows = list(generate_rows(q, 8))
    for parent_row, child_row in zip(rows, rows[1:]):
        parents_of: dict[int, list[int]] = {}
        for p, c in child_edges(parent_row.kinds, q):
            parents_of.setdefault(c, []).append(parent_row.values[p])
        assert sorted(parents_of) == list(range(len(child_row)))
        for c, parent_values in parents_of.items():
            value = child_row.values[c]
            if child_row.kinds[c] == "W":
                assert value == 1 and len(parent_values) == 1
            elif len(parent_values) == 1:
                assert value == parent_values[0]
            else:
                assert value == sum(parent_values)


def test_edge_counts_match_down_degrees(rows_q5):
    degree = {"W": 2, "A": 3, "B": 4}  # q = 5
    for row in rows_q5[1:6]:
        edges = list(child_edges(row.kinds, 5))
        assert len(edges) == sum(degree[k] for k in row.kinds)


def test_budget_reports_first_offending_row():
    with pytest.raises(BudgetExceeded) as exc_info:
        list(generate_rows(5, 100, cell_budget=100))
    assert exc_info.value.row == 7  # rows sized 2,3,5,10,23,57,146,...


def test_generate_rows_streams_expected_lengths():
    rows = list(generate_rows(6, 3, cell_budget=10**6))
    assert [len(r) for r in rows] == [1, 2, 3, 6]


def test_central_cell(rows_q5):
    assert central_cell(rows_q5[3]) == Cell(2, "B")
    assert central_cell(rows_q5[6]) == Cell(4, "B")
    with pytest.raises(NoCentralCell):
        central_cell(rows_q5[4])


def test_cell_at():
    assert cell_at(5, 3, 2).value == 2
    assert cell_at(5, 4, 3).value == 5
    for q in (4, 5, 7):
        for n in (0, 3, 6):
            assert cell_at(q, n, 0) == Cell(1, "W")
    with pytest.raises(IndexError):
        cell_at(5, 3, 5)


def test_q_below_four_rejected():
    with pytest.raises(ValueError):
        next_row(initial_row(), 3)
    with pytest.raises(ValueError):
        list(generate_rows(3, 2))


def test_row_cell_count_matches_generation(rows_q5):
    for row in rows_q5:
        assert row_cell_count(5, row.n) == len(row)
    assert row_cell_count(5, 7, cap=100) is None
    assert row_cell_count(5, 6, cap=100) == 57


def test_largest_row_within():
    assert largest_row_within(5, 100) == 6
    assert largest_row_within(5, 1) == 0
