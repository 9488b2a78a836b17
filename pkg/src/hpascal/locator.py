"""Place any pair of positive integers side by side in the q = 5 triangle.

Every pair (u, v) occurs as neighbouring cells of some row.  The row is
found constructively from the quotient ledger of the Euclidean
algorithm on (u, v): replaying the divisions in reverse descends the
triangle, each quotient worth that many rows, starting from the pair
(1, t) on the left leg.  With t' the penultimate remainder (t' = u for
a single division) and r the sum of all quotients but the last:

    u = 1        ->  row v
    u = v != 1   ->  row v + 2
    gcd = 1      ->  row t' + r
    gcd = d > 1  ->  row (d + 1) + row(u/d, v/d)

The last branch descends to the scaled copy of the whole triangle that
hangs below the kind-B cell of value d in row d + 1.

A located row is trusted only when the row is generated in full and the
pair is actually found by scanning; the descent trace travels along as
evidence, never as proof.  Binary recurrences f[j] = eta*f[j-1] + f[j-2]
ride the same machinery: their consecutive pairs sit eta rows apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .triangle import DEFAULT_CELL_BUDGET, generate_rows, row_cell_count

FULL_ROW = "full-row"
UNVERIFIED = "unverified"

AS_GIVEN = "as-given"
MIRRORED = "mirrored"


class LocationFailure(Exception):
    """The predicted row was scanned in full and the pair was not there.

    This signals a bug in the row formula or its interpretation; it is
    surfaced rather than silently corrected.
    """

    def __init__(self, u: int, v: int, row: int) -> None:
        self.u, self.v, self.row = u, v, row
        super().__init__(f"pair ({u}, {v}) not adjacent anywhere in row {row}")


class DescentStep(NamedTuple):
    descend: int
    side: str


@dataclass(frozen=True)
class EuclidChain:
    """Quotients and remainders of the Euclidean algorithm on u <= v.

    quotients holds r0..rn of v = r0*u + t1, u = r1*t1 + t2, ...,
    remainders the nonzero t1..tn (so gcd = tn, or u itself when the
    first division is already exact).  r is the quotient sum without
    the final, exact division.
    """

    u: int
    v: int
    quotients: tuple[int, ...]
    remainders: tuple[int, ...]
    gcd: int
    r: int

    @property
    def penultimate(self) -> int:
        """The remainder before the gcd, counting t0 = u."""
        if not self.remainders:
            raise ValueError("degenerate chain: u divides v")
        if len(self.remainders) == 1:
            return self.u
        return self.remainders[-2]


def euclid_chain(u: int, v: int) -> EuclidChain:
    if not 1 <= u <= v:
        raise ValueError(f"need 1 <= u <= v, got ({u}, {v})")
    quotients: list[int] = []
    remainders: list[int] = []
    a, b = v, u
    while True:
        quot, rem = divmod(a, b)
        quotients.append(quot)
        if rem == 0:
            break
        remainders.append(rem)
        a, b = b, rem
    return EuclidChain(
        u, v, tuple(quotients), tuple(remainders), b, sum(quotients[:-1])
    )


def locate_row(u: int, v: int) -> int:
    """A row of the q = 5 triangle containing u and v as neighbours."""
    if not 1 <= u <= v:
        raise ValueError(f"need 1 <= u <= v, got ({u}, {v})")
    if u == 1:
        return v
    if u == v:
        return v + 2
    chain = euclid_chain(u, v)
    if chain.gcd == 1:
        return chain.penultimate + chain.r
    d = chain.gcd
    return (d + 1) + locate_row(u // d, v // d)


def descent_trace(u: int, v: int) -> list[DescentStep]:
    """Row-by-row descent evidence; the step counts sum to locate_row."""
    if not 1 <= u <= v:
        raise ValueError(f"need 1 <= u <= v, got ({u}, {v})")
    if u == 1 or u == v:
        return [DescentStep(locate_row(u, v), "left")]
    chain = euclid_chain(u, v)
    if chain.gcd == 1:
        steps = [DescentStep(chain.penultimate, "left")]
        side = "right"
        for quot in reversed(chain.quotients[:-1]):
            steps.append(DescentStep(quot, side))
            side = "left" if side == "right" else "right"
        return steps
    d = chain.gcd
    return [
        DescentStep(d, "left"),
        DescentStep(1, "center"),
        *descent_trace(u // d, v // d),
    ]


@dataclass
class PairLocation:
    """Where (u, v) sits, and how strongly that was checked.

    When verified is FULL_ROW, cells (col, col+1) of the row hold the
    pair in the reported orientation: (u, v) as given, or (v, u) when
    only the mirror image was found.  Out-of-budget rows come back
    UNVERIFIED with col None.
    """

    u: int
    v: int
    row: int
    col: int | None
    verified: str
    orientation: str | None
    pair_kinds: tuple[str, str] | None
    trace: list[DescentStep] = field(default_factory=list)

    @property
    def value_kinds(self) -> tuple[str, str] | None:
        """Kinds of the cells holding (u, v) in that order, if verified."""
        if self.pair_kinds is None:
            return None
        if self.orientation == MIRRORED:
            return (self.pair_kinds[1], self.pair_kinds[0])
        return self.pair_kinds


def _scan(values: list[int], u: int, v: int) -> tuple[int, str] | None:
    """Leftmost adjacency of (u, v); mirror hits only when none as given."""
    mirrored = None
    for j in range(len(values) - 1):
        if values[j] == u and values[j + 1] == v:
            return j, AS_GIVEN
        if mirrored is None and values[j] == v and values[j + 1] == u:
            mirrored = j
    if mirrored is not None:
        return mirrored, MIRRORED
    return None


def locate_pair(u: int, v: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> PairLocation:
    """Locate (u, v) as row neighbours, scanning the row when it fits."""
    if u < 1 or v < 1:
        raise ValueError(f"both values must be positive, got ({u}, {v})")
    lo, hi = min(u, v), max(u, v)
    row_index = locate_row(lo, hi)
    trace = descent_trace(lo, hi)
    if row_cell_count(5, row_index, cap=cell_budget) is None:
        return PairLocation(u, v, row_index, None, UNVERIFIED, None, None, trace)
    for row in generate_rows(5, row_index, cell_budget):
        pass
    hit = _scan(row.values, u, v)
    if hit is None:
        raise LocationFailure(u, v, row_index)
    col, orientation = hit
    kinds = (row.kinds[col], row.kinds[col + 1])
    return PairLocation(u, v, row_index, col, FULL_ROW, orientation, kinds, trace)


def embed_recurrence(
    f0: int, f1: int, eta: int, m: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> list[PairLocation]:
    """Locate the consecutive pairs of f[j] = eta*f[j-1] + f[j-2].

    Returns locations for (f0, f1) .. (f[m-1], f[m]).  From the second
    pair on, consecutive located rows differ by exactly eta, and each
    verified f[j+1] cell has kind A.
    """
    if not 0 < f0 < f1:
        raise ValueError(f"need 0 < f0 < f1, got ({f0}, {f1})")
    if math.gcd(f0, f1) != 1:
        raise ValueError(f"f0 and f1 must be coprime, got ({f0}, {f1})")
    if eta < 1:
        raise ValueError("eta must be positive")
    if m < 1:
        raise ValueError("need at least one pair")
    terms = [f0, f1]
    while len(terms) <= m:
        terms.append(eta * terms[-1] + terms[-2])
    return [
        locate_pair(terms[j], terms[j + 1], cell_budget) for j in range(m)
    ]
