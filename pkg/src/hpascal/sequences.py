"""Cell counts, row sums and alternating sums of the {4,q} triangle.

Each quantity is computed by three independent routes that must agree
exactly:

  * the coupled first-order system that the growing rule induces,
  * the ternary recurrence obtained by eliminating the coupling,
  * the closed form, evaluated in exact quadratic-field arithmetic.

Counts (a_n kind-A cells, b_n kind-B cells, s_n = a_n + b_n + 2 cells in
row n) obey x[n] = (q-1)x[n-1] - (q-1)x[n-2] + x[n-3]; their closed form
lives in Q(sqrt(q^2-4q)).  Row sums obey x[n] = q x[n-1] - (q+1)x[n-2]
+ 2 x[n-3] with closed form in Q(sqrt(q^2-2q-7)).

The alternating-sum helpers are specific to q = 5, where the signed row
sum stabilises: it is 1 for row 0, vanishes for rows of even length
(n = 3t+1) and for n = 2, is -2 for n = 3, and equals 2 from n = 5 on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .quadfield import QuadElem
from .triangle import Row, TYPE_A, TYPE_B


class DegenerateDiscriminant(ValueError):
    """q = 4 makes the counting discriminant vanish; no closed form."""


class CountTriple(NamedTuple):
    """Counts of kind-A cells, kind-B cells and all cells of a row."""

    a: int
    b: int
    s: int


class SumTriple(NamedTuple):
    """Value sums over kind-A cells, kind-B cells and the whole row."""

    a: int
    b: int
    s: int


class AltTriple(NamedTuple):
    """Signed sums over kind-A cells, kind-B cells, and the whole row.

    Signs alternate with global cell position; the two wingers are
    excluded from a_part and b_part but included in total.
    """

    a_part: int
    b_part: int
    total: int


def _check_args(q: int, n: int) -> None:
    if q < 4:
        raise ValueError(f"q must be at least 4, got {q}")
    if n < 1:
        raise ValueError(f"row index must be at least 1, got {n}")


def counts_coupled(q: int, n: int) -> CountTriple:
    _check_args(q, n)
    a = b = 0
    for _ in range(n - 1):
        a, b = a + b + 1, (q - 4) * a + (q - 3) * b
    return CountTriple(a, b, a + b + 2)


def sums_coupled(q: int, n: int) -> SumTriple:
    _check_args(q, n)
    a = b = 0
    for _ in range(n - 1):
        a, b = 2 * a + 2 * b + 2, (q - 4) * a + (q - 3) * b
    return SumTriple(a, b, a + b + 2)


def _ternary(initial: tuple[int, int, int], c1: int, c2: int, c3: int, n: int) -> int:
    if n <= 3:
        return initial[n - 1]
    x3, x2, x1 = initial
    for _ in range(n - 3):
        x3, x2, x1 = x2, x1, c1 * x1 + c2 * x2 + c3 * x3
    return x1


def counts_ternary(q: int, n: int) -> CountTriple:
    _check_args(q, n)
    c1, c2, c3 = q - 1, -(q - 1), 1
    return CountTriple(
        _ternary((0, 1, 2), c1, c2, c3, n),
        _ternary((0, 0, q - 4), c1, c2, c3, n),
        _ternary((2, 3, q), c1, c2, c3, n),
    )


def sums_ternary(q: int, n: int) -> SumTriple:
    _check_args(q, n)
    c1, c2, c3 = q, -(q + 1), 2
    return SumTriple(
        _ternary((0, 2, 6), c1, c2, c3, n),
        _ternary((0, 0, 2 * (q - 4)), c1, c2, c3, n),
        _ternary((2, 4, 2 * q), c1, c2, c3, n),
    )


def _closed(coef: QuadElem, root_power: QuadElem, shift: int) -> int:
    term = coef * root_power
    return (term + term.conjugate() + shift).as_integer()


def counts_closed(q: int, n: int) -> CountTriple:
    _check_args(q, n)
    if q == 4:
        raise DegenerateDiscriminant("counting closed form needs q >= 5")
    d = q * q - 4 * q
    growth = QuadElem(Fraction(q - 2, 2), Fraction(1, 2), d) ** n
    coef_a = QuadElem(Fraction(2 - q, 2), Fraction(q * q - 4 * q + 2, 2 * q * (q - 4)), d)
    coef_b = QuadElem(Fraction(q - 3, 2), Fraction(1 - q, 2 * q), d)
    coef_s = QuadElem(Fraction(-1, 2), Fraction(q - 2, 2 * q * (q - 4)), d)
    return CountTriple(
        _closed(coef_a, growth, 1),
        _closed(coef_b, growth, -1),
        _closed(coef_s, growth, 2),
    )


def sums_closed(q: int, n: int) -> SumTriple:
    _check_args(q, n)
    d = q * q - 2 * q - 7  # nonnegative for every q >= 4
    growth = QuadElem(Fraction(q - 1, 2), Fraction(1, 2), d) ** n
    coef_a = QuadElem(Fraction(1 - q, 2), Fraction(q * q - 2 * q - 3, 2 * d), d)
    coef_b = QuadElem(Fraction(q - 2, 2), Fraction(-(q * q - 3 * q - 2), 2 * d), d)
    coef_s = QuadElem(Fraction(-1, 2), Fraction(q - 1, 2 * d), d)
    return SumTriple(
        _closed(coef_a, growth, 2),
        _closed(coef_b, growth, -2),
        _closed(coef_s, growth, 2),
    )


# ---------------------------------------------------------------------------
# q = 5 only: parity, alternating and weighted sums
# ---------------------------------------------------------------------------


def parity_s(n: int) -> int:
    """s_n mod 2 for q = 5: even exactly when n = 3t + 1."""
    if n < 1:
        raise ValueError("row index must be at least 1")
    return 0 if n % 3 == 1 else 1


def alt_sum(n: int) -> int:
    """Alternating row sum for q = 5."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    if n == 0:
        return 1
    if n % 3 == 1:
        return 0
    if n == 2:
        return 0
    if n == 3:
        return -2
    return 2


def alt_triple_from_row(row: Row) -> AltTriple:
    """Signed A-part / B-part / total sums of a generated q = 5 row.

    The sign of cell i is (-1)**i.  Wingers contribute to the total only;
    in an odd-length row the two winger terms add +2, in an even-length
    row they cancel.
    """
    a_part = b_part = total = 0
    sign = 1
    for value, kind in zip(row.values, row.kinds):
        term = value if sign > 0 else -value
        sign = -sign
        total += term
        if kind == TYPE_A:
            a_part += term
        elif kind == TYPE_B:
            b_part += term
    return AltTriple(a_part, b_part, total)


def alt_step(a_part: int, b_part: int) -> tuple[int, int]:
    """Advance the signed (A-part, B-part) subsums by three rows (q = 5).

    Valid along rows of odd length, i.e. starting from n with
    n mod 3 in {0, 2}; even-length rows have both subsums zero by
    symmetry and are not stepped through.
    """
    return (-4 * a_part - 8 * b_part - 6, 2 * a_part + 4 * b_part + 2)


def weighted_sum(n: int, v: int, w: int) -> int:
    """Row sum with weight v on even positions and w on odd ones (q = 5).

    Equals (s^ + s~)/2 * v + (s^ - s~)/2 * w where s^ is the plain row
    sum and s~ the alternating one; both halves are integers.
    """
    if n < 1:
        raise ValueError("row index must be at least 1")
    total = sums_ternary(5, n).s
    alt = alt_sum(n)
    if (total + alt) % 2:
        raise ArithmeticError(f"row sum and alternating sum disagree mod 2 at n={n}")
    return ((total + alt) // 2) * v + ((total - alt) // 2) * w
