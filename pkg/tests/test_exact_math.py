import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordrep.algebra import exact_math
from wordrep.algebra.exact_math import (
    binomial,
    circled_total,
    factorial,
    p_count,
    p_count_sum,
    stirling2,
)

# -----------------------------
# 1. factorial and binomial
# -----------------------------
@pytest.mark.parametrize("k, expected", [(0, 1), (1, 1), (6, 720)])
def test_factorial(k, expected):
    assert factorial(k) == expected


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (7, 0, 1), (3, 5, 0), (3, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


# -----------------------------
# 2. Stirling numbers of the second kind
# -----------------------------
@pytest.mark.parametrize("n, t, expected", [(4, 2, 7), (5, 5, 1), (3, 0, 0), (0, 0, 1), (2, 3, 0)])
def test_stirling2_values(n, t, expected):
    assert stirling2(n, t) == expected


def test_stirling2_recurrence_up_to_30():
    for n in range(1, 31):
        for t in range(1, n + 1):
            assert stirling2(n, t) == t * stirling2(n - 1, t) + stirling2(n - 1, t - 1)


def test_stirling2_large_row_is_exact():
    # {n, 2} = 2^(n-1) - 1
    assert stirling2(200, 2) == 2 ** 199 - 1


# -----------------------------
# 3. p_j(N, c)
# -----------------------------
def test_p_count_examples():
    assert p_count(1, 2, 1) == 1
    assert p_count_sum(0, 4, 2) == 7
    assert p_count_sum(1, 2, 1) == 1
    assert p_count_sum(2, 2, 2) == 1


def test_p_count_out_of_range_is_zero():
    assert p_count(3, 5, 2) == 0
    assert p_count(0, 2, 3) == 0
    assert p_count_sum(3, 5, 2) == 0


def test_p_count_zero_circles_is_stirling():
    for N in range(0, 9):
        for c in range(0, N + 1):
            assert p_count(0, N, c) == stirling2(N, c)


def test_p_count_all_blocks_circled():
    for N in range(0, 9):
        for c in range(0, N + 1):
            assert p_count(c, N, c) == c ** (N - c)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12).flatmap(
    lambda N: st.tuples(st.just(N), st.integers(0, N)).flatmap(
        lambda nc: st.tuples(st.just(nc[0]), st.just(nc[1]), st.integers(0, nc[1]))
    )
))
def test_p_count_sum_matches_series(args):
    N, c, j = args
    assert p_count_sum(j, N, c) == p_count(j, N, c)


def test_p_count_rejects_negative():
    with pytest.raises(ValueError):
        p_count(-1, 2, 1)


# -----------------------------
# 4. Circled totals
# -----------------------------
@pytest.mark.parametrize("N, expected", [(0, 1), (1, 2), (2, 7), (3, 30), (6, 5653), (8, 306419)])
def test_circled_total(N, expected):
    assert circled_total(N) == expected
    assert circled_total(N, closed_sum=True) == expected


def test_circled_total_closed_sum_sees_patched_stirling(monkeypatch):
    original = exact_math.stirling2
    monkeypatch.setattr(exact_math, "stirling2", lambda n, t: original(n, t) + (1 if (n, t) == (3, 2) else 0))
    assert circled_total(3, closed_sum=True) == 31
    assert circled_total(3) == 30
