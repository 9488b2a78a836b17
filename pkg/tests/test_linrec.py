from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hpascal.linrec import (
    CoupledSystem,
    TernaryCoeffs,
    check_satisfies,
    eliminate,
    eliminate_homogeneous,
)
from hpascal.sequences import counts_ternary

small_ints = st.integers(-5, 5)


@pytest.mark.parametrize("q", range(4, 13))
def test_count_system_eliminates_to_row_count_recurrence(q):
    coeffs = eliminate(CoupledSystem(1, 1, 1, q - 4, q - 3, 0))
    assert coeffs == (q - 1, -(q - 1), 1)


@pytest.mark.parametrize("q", range(4, 13))
def test_sum_system_eliminates_to_row_sum_recurrence(q):
    coeffs = eliminate(CoupledSystem(2, 2, 2, q - 4, q - 3, 0))
    assert coeffs == (q, -(q + 1), 2)


def test_alternating_influence_system_stabilises():
    # z[n+3] = z[n+2]: the signed subsums freeze after two steps
    assert eliminate(CoupledSystem(-4, -8, -6, 2, 4, 2)) == (1, 0, 0)


@pytest.mark.parametrize("q", range(4, 13))
def test_homogeneous_count_system(q):
    assert eliminate_homogeneous(CoupledSystem(1, 1, 0, q - 4, q - 3, 0)) == (q - 2, -1)


@pytest.mark.parametrize("q", range(4, 13))
def test_homogeneous_sum_system(q):
    assert eliminate_homogeneous(CoupledSystem(2, 2, 0, q - 4, q - 3, 0)) == (q - 1, -2)


def test_homogeneous_swap_system():
    assert eliminate_homogeneous(CoupledSystem(0, 1, 0, 1, 0, 0)) == (0, 1)


def test_homogeneous_rejects_constants():
    with pytest.raises(ValueError):
        eliminate_homogeneous(CoupledSystem(1, 1, 1, 1, 1, 0))


def test_check_satisfies_row_count_sequence():
    seq = [counts_ternary(5, n).s for n in range(1, 9)]
    assert seq[:4] == [2, 3, 5, 10]
    assert check_satisfies(seq, TernaryCoeffs(4, -4, 1))


def test_check_satisfies_constant_sequence():
    assert check_satisfies([1, 1, 1, 1, 1], TernaryCoeffs(1, 0, 0))


def test_check_satisfies_detects_mismatch():
    assert not check_satisfies([1, 2, 4, 10], TernaryCoeffs(4, -4, 1))


def test_check_satisfies_needs_four_terms():
    with pytest.raises(ValueError):
        check_satisfies([1, 2, 3], TernaryCoeffs(1, 0, 0))


@given(
    st.tuples(*[small_ints] * 6),
    st.tuples(small_ints, small_ints),
)
def test_trajectories_satisfy_eliminated_recurrence(coeffs, seeds):
    a1, b1, c1, a2, b2, c2 = coeffs
    assume(a2 * b1 != 0)
    system = CoupledSystem(a1, b1, c1, a2, b2, c2)
    x, y = Fraction(seeds[0]), Fraction(seeds[1])
    xs, ys = [x], [y]
    for _ in range(12):
        x, y = system.step(x, y)
        xs.append(x)
        ys.append(y)
    ternary = eliminate(system)
    assert check_satisfies(xs, ternary)
    assert check_satisfies(ys, ternary)
    if c1 == 0 and c2 == 0:
        a_bin, b_bin = eliminate_homogeneous(system)
        assert all(
            xs[k + 2] == a_bin * xs[k + 1] + b_bin * xs[k] for k in range(11)
        )
        assert all(
            ys[k + 2] == a_bin * ys[k + 1] + b_bin * ys[k] for k in range(11)
        )
