"""Self-contained verification suites over the whole library.

Each suite checks one family of exact claims end to end and reports a
single pass/fail result with a short account of what was covered.
Everything is exact integer or rational arithmetic; a single mismatch
anywhere fails the suite and is named in the detail string.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import linrec, locator, pattern, sequences
from .quadfield import NotIntegralError, NotRationalError
from .sequences import AltTriple
from .triangle import (
    DEFAULT_CELL_BUDGET,
    binomial_row,
    generate_rows,
    largest_row_within,
    row_cell_count,
    row_counts,
    row_sums,
)

AGREEMENT_QS = (5, 6, 7, 10)
AGREEMENT_N_MAX = 60

# signed (A-part, B-part, total) row sums for q = 5, rows 0..12
ALT_TABLE = [
    AltTriple(0, 0, 1),
    AltTriple(0, 0, 0),
    AltTriple(-2, 0, 0),
    AltTriple(-6, 2, -2),
    AltTriple(0, 0, 0),
    AltTriple(2, -2, 2),
    AltTriple(2, -2, 2),
    AltTriple(0, 0, 0),
    AltTriple(2, -2, 2),
    AltTriple(2, -2, 2),
    AltTriple(0, 0, 0),
    AltTriple(2, -2, 2),
    AltTriple(2, -2, 2),
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _ok(name: str, detail: str) -> CheckResult:
    return CheckResult(name, True, detail)


def euclidean_oracle() -> CheckResult:
    """q = 4 rows 0..20 are exactly Pascal's triangle, with no kind-B cells."""
    name = "euclidean-oracle"
    for row in generate_rows(4, 20):
        if row.values != binomial_row(row.n):
            return _fail(name, f"row {row.n} differs from binomial coefficients")
        if "B" in row.kinds:
            return _fail(name, f"row {row.n} contains a kind-B cell")
    return _ok(name, "q=4 rows 0..20 match binomials, zero kind-B cells")


def three_way_agreement() -> CheckResult:
    """Coupled, ternary and closed-form counts/sums agree, and match rows."""
    name = "three-way"
    for q in AGREEMENT_QS:
        for n in range(1, AGREEMENT_N_MAX + 1):
            c = sequences.counts_coupled(q, n)
            if sequences.counts_ternary(q, n) != c:
                return _fail(name, f"count ternary/coupled mismatch at q={q} n={n}")
            if sequences.counts_closed(q, n) != c:
                return _fail(name, f"count closed/coupled mismatch at q={q} n={n}")
            s = sequences.sums_coupled(q, n)
            if sequences.sums_ternary(q, n) != s:
                return _fail(name, f"sum ternary/coupled mismatch at q={q} n={n}")
            if sequences.sums_closed(q, n) != s:
                return _fail(name, f"sum closed/coupled mismatch at q={q} n={n}")
    rows_checked = 0
    for q in AGREEMENT_QS:
        n_cap = largest_row_within(q, DEFAULT_CELL_BUDGET)
        for row in generate_rows(q, n_cap):
            if row.n < 1:
                continue
            if row_counts(row) != tuple(sequences.counts_coupled(q, row.n)):
                return _fail(name, f"generated counts mismatch at q={q} n={row.n}")
            if row_sums(row) != tuple(sequences.sums_coupled(q, row.n)):
                return _fail(name, f"generated sums mismatch at q={q} n={row.n}")
            rows_checked += 1
    return _ok(
        name,
        f"q in {AGREEMENT_QS}: three routes agree for n=1..{AGREEMENT_N_MAX}; "
        f"{rows_checked} generated rows match",
    )


def alternating_sums() -> CheckResult:
    """Alternating-sum table, closed description, and three-row stepping."""
    name = "alternating"
    for row in generate_rows(5, 17):
        triple = sequences.alt_triple_from_row(row)
        if row.n <= 12 and triple != ALT_TABLE[row.n]:
            return _fail(name, f"signed subsums at n={row.n}: {triple}")
        if triple.total != sequences.alt_sum(row.n):
            return _fail(name, f"alternating sum of generated row {row.n}")
    # step the signed subsums three rows at a time along both odd-length
    # residue chains; even-length rows (n = 3t+1) vanish by symmetry
    for start, seed in ((0, (0, 0)), (2, (-2, 0))):
        a_part, b_part = seed
        n = start
        while n <= 10**4:
            expected = 1 if n == 0 else a_part + b_part + 2
            if expected != sequences.alt_sum(n):
                return _fail(name, f"stepped subsums disagree with alt_sum at n={n}")
            a_part, b_part = sequences.alt_step(a_part, b_part)
            n += 3
    for n in range(1, 10**4, 3):
        if sequences.alt_sum(n) != 0:
            return _fail(name, f"even-length row n={n} must have alternating sum 0")
    return _ok(name, "table rows 0..12, generated rows 0..17, stepping to n=10^4")


def parity() -> CheckResult:
    """Row-size parity rule: even exactly at n = 3t+1 (q = 5)."""
    name = "parity"
    c1, c2, c3 = 4, -4, 1
    x3, x2, x1 = 2, 3, 5  # s_1, s_2, s_3
    for n in range(1, 1001):
        if n <= 3:
            s = (2, 3, 5)[n - 1]
        else:
            x3, x2, x1 = x2, x1, c1 * x1 + c2 * x2 + c3 * x3
            s = x1
        if s % 2 != sequences.parity_s(n):
            return _fail(name, f"ternary parity mismatch at n={n}")
    n_cap = largest_row_within(5, DEFAULT_CELL_BUDGET)
    for row in generate_rows(5, n_cap):
        if row.n >= 1 and len(row) % 2 != sequences.parity_s(row.n):
            return _fail(name, f"generated row length parity at n={row.n}")
    return _ok(name, f"ternary n=1..1000 and generated rows 1..{n_cap}")


def pattern_checks() -> CheckResult:
    """Pattern code value, difference recurrence, and repetition checks."""
    name = "pattern"
    if pattern.pattern_int(3) != 21:
        return _fail(name, "pattern of row 3 must encode to 21")
    for n in range(3, 15):
        if not pattern.check_pattern_recurrence(n):
            return _fail(name, f"pattern-difference recurrence fails at n={n}")
    for n in [0, *range(2, 16)]:
        if not pattern.check_prefix(n):
            return _fail(name, f"prefix repetition fails at n={n}")
    for n in range(0, 13):
        if not pattern.check_central_copy(n):
            return _fail(name, f"central copy fails at n={n}")
    for k in range(1, 7):
        if not pattern.check_central_value(k):
            return _fail(name, f"central value 2^{k} fails at k={k}")
    return _ok(
        name,
        "code(3)=21; recurrence n=3..14; prefix n=0,2..15; "
        "central copy n=0..12; central value k=1..6",
    )


def locator_pairs() -> CheckResult:
    """Every in-budget coprime pair up to 30 scan-verifies, plus spot pairs."""
    name = "locator"
    total = verified = skipped = 0
    for v in range(2, 31):
        for u in range(1, v):
            if math.gcd(u, v) != 1:
                continue
            total += 1
            row_index = locator.locate_row(u, v)
            if row_cell_count(5, row_index, cap=DEFAULT_CELL_BUDGET) is None:
                skipped += 1
                continue
            try:
                loc = locator.locate_pair(u, v)
            except locator.LocationFailure as exc:
                return _fail(name, f"location failure: {exc}")
            if loc.verified != locator.FULL_ROW:
                return _fail(name, f"pair ({u},{v}) not verified")
            verified += 1
    if verified < 0.9 * total:
        return _fail(name, f"only {verified}/{total} coprime pairs verified")
    spots = [((2, 3), 3, 2), ((3, 5), 4, 2), ((2, 2), 4, 4), ((4, 6), 6, 28)]
    for (u, v), want_row, want_col in spots:
        loc = locator.locate_pair(u, v)
        if loc.verified != locator.FULL_ROW or (loc.row, loc.col) != (want_row, want_col):
            return _fail(
                name, f"spot pair ({u},{v}): got row {loc.row} col {loc.col}"
            )
    return _ok(
        name,
        f"{verified}/{total} coprime pairs <= 30 verified ({skipped} over budget), "
        "spot pairs at expected cells",
    )


def embeddings() -> CheckResult:
    """Fibonacci and Pell pair chains, and eta-spaced rows in general."""
    name = "embeddings"
    fib = locator.embed_recurrence(1, 2, 1, 14)
    if [loc.row for loc in fib] != list(range(2, 16)):
        return _fail(name, f"Fibonacci rows: {[loc.row for loc in fib]}")
    for loc in fib:
        if loc.verified != locator.FULL_ROW:
            return _fail(name, f"Fibonacci pair ({loc.u},{loc.v}) unverified")
        if loc.value_kinds[1] != "A":
            return _fail(name, f"Fibonacci cell {loc.v} in row {loc.row} not kind A")
    pell = locator.embed_recurrence(1, 2, 2, 5)
    if [loc.row for loc in pell] != [2, 4, 6, 8, 10]:
        return _fail(name, f"Pell rows: {[loc.row for loc in pell]}")
    if any(loc.verified != locator.FULL_ROW for loc in pell):
        return _fail(name, "Pell pair unverified")
    rng = random.Random(94721)
    families = 0
    while families < 6:
        f0 = rng.randint(1, 4)
        f1 = f0 + rng.randint(1, 4)
        eta = rng.randint(1, 3)
        if math.gcd(f0, f1) != 1:
            continue
        locs = locator.embed_recurrence(f0, f1, eta, 4)
        if any(loc.row > 14 for loc in locs):
            continue
        rows = [loc.row for loc in locs]
        for j in range(1, len(rows) - 1):
            if rows[j + 1] - rows[j] != eta:
                return _fail(
                    name, f"spacing {rows} != {eta} for ({f0},{f1},eta={eta})"
                )
        if any(loc.verified != locator.FULL_ROW for loc in locs):
            return _fail(name, f"unverified pair in family ({f0},{f1},eta={eta})")
        families += 1
    return _ok(name, "Fibonacci rows 2..15 (kind A), Pell rows 2..10, 6 eta families")


def elimination() -> CheckResult:
    """Coupled-to-ternary elimination: named systems and random round trips."""
    name = "elimination"
    for q in range(4, 13):
        got = linrec.eliminate(linrec.CoupledSystem(1, 1, 1, q - 4, q - 3, 0))
        if got != (q - 1, -(q - 1), 1):
            return _fail(name, f"count system at q={q}: {got}")
        got = linrec.eliminate(linrec.CoupledSystem(2, 2, 2, q - 4, q - 3, 0))
        if got != (q, -(q + 1), 2):
            return _fail(name, f"sum system at q={q}: {got}")
    got = linrec.eliminate(linrec.CoupledSystem(-4, -8, -6, 2, 4, 2))
    if got != (1, 0, 0):
        return _fail(name, f"alternating-influence system: {got}")
    rng = random.Random(181737)
    done = 0
    while done < 100:
        a1, b1, c1, a2, b2, c2 = (rng.randint(-5, 5) for _ in range(6))
        if a2 * b1 == 0:
            continue
        sys_ = linrec.CoupledSystem(a1, b1, c1, a2, b2, c2)
        x, y = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        xs, ys = [x], [y]
        for _ in range(12):
            x, y = sys_.step(x, y)
            xs.append(x)
            ys.append(y)
        coeffs = linrec.eliminate(sys_)
        if not (linrec.check_satisfies(xs, coeffs) and linrec.check_satisfies(ys, coeffs)):
            return _fail(name, f"round trip fails for {sys_}")
        if c1 == 0 and c2 == 0:
            a_bin, b_bin = linrec.eliminate_homogeneous(sys_)
            if any(
                xs[k + 2] != a_bin * xs[k + 1] + b_bin * xs[k] for k in range(11)
            ):
                return _fail(name, f"homogeneous elimination fails for {sys_}")
        done += 1
    return _ok(name, "named systems q=4..12, influence system, 100 random round trips")


def exactness() -> CheckResult:
    """Every closed-form evaluation lands exactly on an integer."""
    name = "exactness"
    for q in AGREEMENT_QS:
        for n in range(1, AGREEMENT_N_MAX + 1):
            try:
                sequences.counts_closed(q, n)
                sequences.sums_closed(q, n)
            except (NotRationalError, NotIntegralError) as exc:
                return _fail(name, f"closed form q={q} n={n}: {exc}")
    return _ok(
        name,
        f"all closed forms integral for q in {AGREEMENT_QS}, n=1..{AGREEMENT_N_MAX}",
    )


SUITES: dict[str, Callable[[], CheckResult]] = {
    "euclidean-oracle": euclidean_oracle,
    "three-way": three_way_agreement,
    "alternating": alternating_sums,
    "parity": parity,
    "pattern": pattern_checks,
    "locator": locator_pairs,
    "embeddings": embeddings,
    "elimination": elimination,
    "exactness": exactness,
}


def run(names: Iterable[str] | None = None) -> list[CheckResult]:
    picked = list(SUITES) if names is None else list(names)
    results = []
    for suite_name in picked:
        if suite_name not in SUITES:
            raise ValueError(
                f"unknown suite {suite_name!r}; choose from {', '.join(SUITES)}"
            )
        results.append(SUITES[suite_name]())
    return results
