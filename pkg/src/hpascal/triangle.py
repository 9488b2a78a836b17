"""Row-by-row construction of the hyperbolic Pascal triangle for {4,q}.

Vertices of the square mosaic {4,q} (q >= 5 hyperbolic, q = 4 the
Euclidean square grid) are arranged into rows by graph distance from a
base vertex, and every vertex is labelled with its number of shortest
paths from the base.  Rows grow left to right by one uniform rule:

  * the two outermost cells ("wingers", kind W) each produce a new
    winger with value 1;
  * every adjacent pair of parent cells merges one pair of edges into a
    single kind-A child whose value is the sum of the two parents;
  * each inner kind-A parent additionally drops q-4 kind-B children,
    each inner kind-B parent drops q-3, all copying the parent's value.

For q = 4 no kind-B cells ever appear and the construction reproduces
Pascal's triangle exactly.

Rows are immutable once produced; generation is strictly streaming
(row n+1 is built from row n only), and row sizes grow geometrically,
so a cell budget guards every generating entry point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

WINGER = "W"
TYPE_A = "A"
TYPE_B = "B"

DEFAULT_CELL_BUDGET = 10**7


class BudgetExceeded(Exception):
    """A requested row does not fit in the cell budget."""

    def __init__(self, row: int, size: int | None = None) -> None:
        self.row = row
        self.size = size
        detail = f" ({size} cells)" if size is not None else ""
        super().__init__(f"row {row} exceeds the cell budget{detail}")


class NoCentralCell(ValueError):
    """Row has an even number of cells, so there is no middle one."""


class Cell(NamedTuple):
    value: int
    kind: str


@dataclass(slots=True)
class Row:
    """One row: index n, cell values and a parallel string of kinds."""

    n: int
    values: list[int]
    kinds: str

    def __len__(self) -> int:
        return len(self.values)

    def cell(self, k: int) -> Cell:
        if not 0 <= k < len(self.values):
            raise IndexError(f"row {self.n} has no cell {k}")
        return Cell(self.values[k], self.kinds[k])


def _check_q(q: int) -> None:
    if q < 4:
        raise ValueError(f"q must be at least 4, got {q}")


def initial_row() -> Row:
    """Row 0: the base vertex alone, classified as a winger."""
    return Row(0, [1], WINGER)


def next_row(row: Row, q: int) -> Row:
    _check_q(q)
    vals = row.values
    kinds = row.kinds
    m = len(vals)
    if m == 1:
        # both downward edges of the base vertex become wingers
        return Row(row.n + 1, [1, 1], WINGER + WINGER)

    a_fill = q - 4
    b_fill = q - 3
    a_fill_kinds = TYPE_B * a_fill
    b_fill_kinds = TYPE_B * b_fill

    out_vals: list[int] = [1]
    out_kinds: list[str] = [WINGER]
    append_val = out_vals.append
    extend_vals = out_vals.extend
    append_kinds = out_kinds.append

    prev = vals[0]
    for i in range(1, m):
        if i > 1:
            # kind-B children of the inner parent i-1, before its right merge
            if kinds[i - 1] == TYPE_A:
                if a_fill:
                    extend_vals([prev] * a_fill)
                    append_kinds(a_fill_kinds)
            else:
                extend_vals([prev] * b_fill)
                append_kinds(b_fill_kinds)
        cur = vals[i]
        append_val(prev + cur)
        append_kinds(TYPE_A)
        prev = cur
    append_val(1)
    append_kinds(WINGER)
    return Row(row.n + 1, out_vals, "".join(out_kinds))


def row_cell_count(q: int, n: int, cap: int | None = None) -> int | None:
    """Cell count of row n, or None once it exceeds cap (if given).

    Runs the cheap coupled counting recurrence instead of building rows,
    and stops early when a cap is supplied, so it is safe for huge n.
    """
    _check_q(q)
    if n < 0:
        raise ValueError("row index must be nonnegative")
    if n == 0:
        return 1
    a = b = 0
    for k in range(1, n + 1):
        s = a + b + 2
        if cap is not None and s > cap:
            return None
        if k == n:
            return s
        a, b = a + b + 1, (q - 4) * a + (q - 3) * b
    raise AssertionError("unreachable")


def largest_row_within(q: int, cell_budget: int) -> int:
    """Largest n whose row fits the budget (row sizes increase with n)."""
    _check_q(q)
    if cell_budget < 1:
        raise ValueError("cell budget must be positive")
    a = b = 0
    n = 1
    while True:
        s = a + b + 2
        if s > cell_budget:
            return n - 1
        a, b = a + b + 1, (q - 4) * a + (q - 3) * b
        n += 1


def generate_rows(
    q: int, n_max: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> Iterator[Row]:
    """Stream rows 0..n_max in order.

    Raises BudgetExceeded (carrying the first offending row index) before
    any over-budget row is materialised.
    """
    _check_q(q)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if cell_budget < 1:
        raise ValueError("cell budget must be positive")
    row = initial_row()
    yield row
    a = b = 0  # cell counts of the row about to be built
    for n in range(1, n_max + 1):
        size = a + b + 2
        if size > cell_budget:
            raise BudgetExceeded(n, size)
        row = next_row(row, q)
        yield row
        a, b = a + b + 1, (q - 4) * a + (q - 3) * b


def nth_row(q: int, n: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> Row:
    """Row n alone, generated streaming (only two rows held at a time)."""
    for row in generate_rows(q, n, cell_budget):
        pass
    return row


def row_counts(row: Row) -> tuple[int, int, int]:
    """(#kind-A, #kind-B, total) cells of a row with index >= 1."""
    if row.n < 1:
        raise ValueError("row 0 has no winger pair; counts start at row 1")
    a = row.kinds.count(TYPE_A)
    b = row.kinds.count(TYPE_B)
    return a, b, len(row.values)


def row_sums(row: Row) -> tuple[int, int, int]:
    """(sum over kind-A, sum over kind-B, total sum) of a row's values."""
    if row.n < 1:
        raise ValueError("row 0 has no winger pair; sums start at row 1")
    total = sum(row.values)
    a = sum(v for v, k in zip(row.values, row.kinds) if k == TYPE_A)
    return a, total - a - 2, total


def central_cell(row: Row) -> Cell:
    m = len(row.values)
    if m % 2 == 0:
        raise NoCentralCell(f"row {row.n} has {m} cells")
    return row.cell(m // 2)


def cell_at(q: int, n: int, k: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> Cell:
    """The k-th cell of row n, generating as needed."""
    row = nth_row(q, n, cell_budget)
    return row.cell(k)


def child_edges(kinds: str, q: int) -> Iterator[tuple[int, int]]:
    """Edges (parent index, child index) from a row with these kinds.

    Children are numbered in the left-to-right order used by next_row;
    merged kind-A children receive one edge from each of their two
    parents.
    """
    _check_q(q)
    m = len(kinds)
    if m == 1:
        yield 0, 0
        yield 0, 1
        return
    fill = {WINGER: 0, TYPE_A: q - 4, TYPE_B: q - 3}
    yield 0, 0
    c = 1
    for i in range(m - 1):
        if i > 0:
            for _ in range(fill[kinds[i]]):
                yield i, c
                c += 1
        yield i, c
        yield i + 1, c
        c += 1
    yield m - 1, c


def binomial_row(n: int) -> list[int]:
    """Pascal's triangle row n; the q = 4 oracle."""
    return [math.comb(n, k) for k in range(n + 1)]
