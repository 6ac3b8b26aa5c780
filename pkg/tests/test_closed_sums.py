import pytest

from wordrep import config
from wordrep.counting import closed_sums
from wordrep.counting.closed_sums import (
    has_closed_sum,
    rotation_half_size,
    sum_h_even,
    sum_h_odd,
    sum_p,
    sum_quantity,
    sum_r_oddodd,
    sum_s_eveneven,
)
from wordrep.counting.egf_counts import count_h, count_p, count_r, count_s, count_v
from wordrep.counting.models import GridShape, shapes_up_to
from wordrep.exceptions import MethodUnavailableError


def g(m, n):
    return GridShape(m=m, n=n)


# -----------------------------
# 1. Individual summations
# -----------------------------
@pytest.mark.parametrize("m, n, expected", [(2, 1, 7), (3, 1, 30), (2, 3, 5653), (2, 4, 306419)])
def test_sum_p(m, n, expected):
    assert sum_p(g(m, n)) == expected


@pytest.mark.parametrize("m, n, expected", [(2, 1, 3), (2, 2, 16), (2, 3, 107), (2, 4, 851)])
def test_sum_h_even(m, n, expected):
    assert sum_h_even(g(m, n)) == expected


@pytest.mark.parametrize("m, n, expected", [(1, 2, 7), (3, 1, 8), (3, 2, 197)])
def test_sum_h_odd(m, n, expected):
    assert sum_h_odd(g(m, n)) == expected


@pytest.mark.parametrize("m, n, expected", [(1, 1, 2), (3, 1, 8), (1, 3, 8)])
def test_sum_r_oddodd(m, n, expected):
    assert sum_r_oddodd(g(m, n)) == expected


@pytest.mark.slow
def test_sum_r_oddodd_3x5():
    assert sum_r_oddodd(g(3, 5)) == 3302472


@pytest.mark.parametrize("m, n, expected", [(2, 2, 6), (2, 4, 55), (4, 2, 55)])
def test_sum_s_eveneven(m, n, expected):
    assert sum_s_eveneven(g(m, n)) == expected


def test_rotation_half_size():
    assert rotation_half_size(g(1, 1)) == 0
    assert rotation_half_size(g(3, 1)) == 1
    assert rotation_half_size(g(3, 5)) == 7


# -----------------------------
# 2. Agreement with the generating functions
# -----------------------------
def _sum_shapes():
    for shape in shapes_up_to(config.CLOSED_SUM_MAX_CELLS):
        marks = [pytest.mark.slow] if shape.cells > 8 else []
        yield pytest.param(shape, id=str(shape), marks=marks)


@pytest.mark.parametrize("shape", list(_sum_shapes()))
def test_sums_match_egf(shape):
    assert sum_quantity(shape, "P") == count_p(shape)
    assert sum_quantity(shape, "H") == count_h(shape)
    assert sum_quantity(shape, "V") == count_v(shape)
    if shape.m % 2 and shape.n % 2 and rotation_half_size(shape) > config.ROTATION_SUM_MAX_HALF:
        return
    assert sum_quantity(shape, "R") == count_r(shape)
    if has_closed_sum(shape, "S"):
        assert sum_quantity(shape, "S") == count_s(shape)


# -----------------------------
# 3. Parity and availability
# -----------------------------
@pytest.mark.parametrize(
    "fn, m, n",
    [(sum_h_even, 3, 2), (sum_h_odd, 2, 3), (sum_r_oddodd, 2, 3), (sum_r_oddodd, 3, 2), (sum_s_eveneven, 2, 3)],
)
def test_wrong_parity(fn, m, n):
    with pytest.raises(ValueError):
        fn(g(m, n))


def test_has_closed_sum():
    assert has_closed_sum(g(2, 4), "S")
    assert not has_closed_sum(g(3, 4), "S")
    assert not has_closed_sum(g(3, 4), "C")
    assert all(has_closed_sum(g(3, 5), q) for q in ("P", "H", "V", "R", "W"))


def test_no_closed_sum_for_odd_full_symmetry():
    with pytest.raises(MethodUnavailableError):
        sum_quantity(g(3, 1), "S")
    with pytest.raises(MethodUnavailableError):
        sum_quantity(g(2, 3), "Q")


def test_sums_read_the_patched_stirling_table(monkeypatch):
    original = closed_sums.exact_math.stirling2

    def perturbed(n, t):
        return original(n, t) + (1 if (n, t) == (1, 1) else 0)

    monkeypatch.setattr(closed_sums.exact_math, "stirling2", perturbed)
    assert sum_p(g(2, 1)) != 7
