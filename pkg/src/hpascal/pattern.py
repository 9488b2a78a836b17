"""The A/B pattern of q = 5 rows, encoded as binary integers.

Mapping kind-B cells and wingers to bit 1 and kind-A cells to bit 0
turns each row into an integer whose binary expansion is the row's
pattern (leading bit 1, palindromic, bit length s_n).  Successive
pattern differences satisfy an exact recurrence driven by the powers
2**(s_{n+1} - s_n), and the pattern repeats itself in structured ways:
each row is a prefix of the next (except row 1 of row 2), the centre of
row n+3 is a copy of row n, and row 3k carries the central value 2**k.

The checkers here regenerate rows on demand; pass precomputed rows to
avoid that when verifying many indices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from . import sequences
from .triangle import (
    DEFAULT_CELL_BUDGET,
    Row,
    TYPE_B,
    central_cell,
    generate_rows,
)

_TO_BITS = str.maketrans({"W": "1", "B": "1", "A": "0"})


class PatternCode(NamedTuple):
    n: int
    value: int
    length: int


def pattern_bits(row: Row) -> str:
    """The row's kinds as a bit string (wingers and kind-B map to 1)."""
    return row.kinds.translate(_TO_BITS)


def encode_row(row: Row) -> PatternCode:
    bits = pattern_bits(row)
    return PatternCode(row.n, int(bits, 2), len(bits))


def _rows_by_index(
    wanted: set[int], cell_budget: int, rows: Sequence[Row] | None
) -> dict[int, Row]:
    """Fetch the wanted rows, from a supplied list or by streaming."""
    top = max(wanted)
    if rows is not None:
        if len(rows) <= top:
            raise ValueError(f"need rows up to {top}, got {len(rows)}")
        return {i: rows[i] for i in wanted}
    out: dict[int, Row] = {}
    for row in generate_rows(5, top, cell_budget):
        if row.n in wanted:
            out[row.n] = row
    return out


def pattern_int(
    n: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    rows: Sequence[Row] | None = None,
) -> int:
    """The binary pattern of row n as an integer."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    return encode_row(_rows_by_index({n}, cell_budget, rows)[n]).value


def pattern_diff(
    n: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    rows: Sequence[Row] | None = None,
) -> int:
    """pattern_int(n+1) - pattern_int(n)."""
    got = _rows_by_index({n, n + 1}, cell_budget, rows)
    return encode_row(got[n + 1]).value - encode_row(got[n]).value


def _row_len(n: int) -> int:
    return 1 if n == 0 else sequences.counts_ternary(5, n).s


def growth_power(n: int) -> int:
    """2**(s_{n+1} - s_n): the bit shift between consecutive patterns."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    return 2 ** (_row_len(n + 1) - _row_len(n))


def check_pattern_recurrence(
    n: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    rows: Sequence[Row] | None = None,
) -> bool:
    """Exact check of the pattern-difference recurrence at index n >= 3.

    With D_k = pattern_diff(k) and S_k = growth_power(k):

        D_n = (S_n/S_{n-1} + S_n + S_{n-1}) * D_{n-1} - S_{n-1}**2 * D_{n-2}

    Evaluated over exact rationals, so the integrality of S_n/S_{n-1} is
    checked rather than assumed.
    """
    if n < 3:
        raise ValueError("the recurrence is stated for n >= 3")
    got = _rows_by_index({n - 2, n - 1, n, n + 1}, cell_budget, rows)
    codes = {i: encode_row(r).value for i, r in got.items()}
    d_n = codes[n + 1] - codes[n]
    d_1 = codes[n] - codes[n - 1]
    d_2 = codes[n - 1] - codes[n - 2]
    s_n = growth_power(n)
    s_1 = growth_power(n - 1)
    rhs = (Fraction(s_n, s_1) + s_n + s_1) * d_1 - Fraction(s_1) ** 2 * d_2
    return rhs == d_n


def check_prefix(
    n: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    rows: Sequence[Row] | None = None,
) -> bool:
    """Row n's pattern opens row n+1 (true for every n except n = 1)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    if n == 1:
        raise ValueError("n = 1 is the excluded index: row 2 does not start BB")
    got = _rows_by_index({n, n + 1}, cell_budget, rows)
    this = pattern_bits(got[n])
    return pattern_bits(got[n + 1])[: len(this)] == this


def check_central_copy(
    n: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    rows: Sequence[Row] | None = None,
) -> bool:
    """The centre of row n+3 repeats the whole pattern of row n."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    got = _rows_by_index({n, n + 3}, cell_budget, rows)
    inner = pattern_bits(got[n])
    outer = pattern_bits(got[n + 3])
    start = (len(outer) - len(inner)) // 2
    return outer[start : start + len(inner)] == inner


def check_central_value(
    k: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    rows: Sequence[Row] | None = None,
) -> bool:
    """Row 3k's central cell holds 2**k and has kind B (k >= 1)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    row = _rows_by_index({3 * k}, cell_budget, rows)[3 * k]
    cell = central_cell(row)
    return cell.value == 2**k and cell.kind == TYPE_B
