from unittest.mock import patch

import pytest

import wordrep
from wordrep import config
from wordrep.counting import egf_counts
from wordrep.counting.egf_counts import (
    count_c,
    count_h,
    count_p,
    count_r,
    count_report,
    count_s,
    count_v,
    count_w,
    exponent_for,
)
from wordrep.counting.models import GridShape, shapes_up_to
from wordrep.exceptions import (
    InconsistencyError,
    MethodUnavailableError,
    OracleLimitError,
    SquareShapeError,
)

TABLE_ROWS = [
    # m, n, P, H, V, R, S
    (2, 3, 5653, 107, 197, 107, 23),
    (2, 4, 306419, 851, 851, 851, 55),
    (2, 5, 22277080, 7770, 12976, 7770, 234),
    (3, 2, 5653, 197, 107, 107, 23),
    (3, 4, 2062199125, 463973, 79525, 79525, 1525),
    (3, 5, 2678973711602, 35802956, 8315630, 3302472, 26168),
]


def g(m, n):
    return GridShape(m=m, n=n)


# -----------------------------
# 1. Published values
# -----------------------------
@pytest.mark.parametrize("m, n, p, h, v, r, s", TABLE_ROWS)
def test_reference_table(m, n, p, h, v, r, s):
    shape = g(m, n)
    assert (count_p(shape), count_h(shape), count_v(shape), count_r(shape), count_s(shape)) == (p, h, v, r, s)


def test_worked_3x1_example():
    shape = g(3, 1)
    assert (count_p(shape), count_h(shape), count_v(shape), count_r(shape)) == (30, 8, 30, 8)
    assert count_w(shape) == 19
    assert count_s(shape) == 8
    assert count_c(shape) == 0


# -----------------------------
# 2. Small shapes and boundaries
# -----------------------------
@pytest.mark.parametrize(
    "counter, m, n, expected",
    [
        (count_p, 1, 1, 2),
        (count_h, 2, 2, 16),
        (count_h, 1, 3, 30),
        (count_r, 1, 1, 2),
        (count_s, 2, 2, 6),
        (count_s, 2, 1, 3),
        (count_s, 1, 3, 8),
        (count_s, 1, 1, 2),
        (count_w, 2, 3, 1516),
        (count_c, 2, 3, 5288),
    ],
)
def test_small_values(counter, m, n, expected):
    assert counter(g(m, n)) == expected


def test_single_row_and_column_identities():
    for k in range(1, 9):
        assert count_h(g(1, k)) == count_p(g(1, k))
        assert count_v(g(k, 1)) == count_p(g(k, 1))


def test_unscaled_odd_odd_functions_differ():
    assert count_r(g(3, 1), center_factor=1) == 4
    assert count_s(g(3, 1), center_factor=1) == 4
    assert count_s(g(1, 1), center_factor=1) == 1


def test_center_factor_comes_from_config():
    with patch.object(config, "ROTATION_CENTER_FACTOR", 1):
        assert count_r(g(3, 1)) == 4
    assert count_r(g(3, 1)) == 8


# -----------------------------
# 3. Structural properties
# -----------------------------
def test_transpose_identities():
    for shape in shapes_up_to(20):
        flipped = shape.transpose()
        assert count_p(shape) == count_p(flipped)
        assert count_s(shape) == count_s(flipped)
        assert count_r(shape) == count_r(flipped)
        assert count_h(shape) == count_v(flipped)


def test_sandwich():
    for shape in shapes_up_to(20):
        fixed = [count_h(shape), count_v(shape), count_r(shape)]
        assert count_s(shape) <= min(fixed)
        assert max(fixed) <= count_p(shape)


def test_burnside_integrality():
    for shape in shapes_up_to(30, rectangular=True):
        total = count_p(shape) + count_h(shape) + count_v(shape) + count_r(shape)
        assert total % 4 == 0


def test_square_shapes_refuse_w_and_c():
    with pytest.raises(SquareShapeError):
        count_w(g(2, 2))
    with pytest.raises(SquareShapeError):
        count_c(g(4, 4))


def test_burnside_quotient_refuses_remainder():
    with pytest.raises(InconsistencyError):
        egf_counts.burnside_quotient(g(3, 1), 30, 8, 30, 9)


# -----------------------------
# 4. Exponents
# -----------------------------
@pytest.mark.parametrize("which", list(egf_counts.EXPONENTS))
def test_exponents_have_zero_constant_term(which):
    assert exponent_for(which, (2, 2, 2)).coeff((0, 0, 0)) == 0


def test_unknown_exponent():
    with pytest.raises(KeyError):
        exponent_for("Q", (0, 0, 1))


def test_nonzero_constant_term_is_an_inconsistency():
    broken = dict(egf_counts.EXPONENTS)
    broken["P"] = lambda caps: egf_counts.p_exponent(caps) + 1
    with patch.object(egf_counts, "EXPONENTS", broken):
        with pytest.raises(InconsistencyError):
            exponent_for("P", (0, 0, 2))


# -----------------------------
# 5. Reports
# -----------------------------
def test_report_egf_3x1():
    report = count_report(g(3, 1), "egf")
    assert report.values() == {"P": 30, "H": 8, "V": 30, "R": 8, "S": 8, "W": 19, "C": 0}
    assert report.methods["W"] == "egf"
    assert report.failed_checks == []


def test_report_egf_2x5():
    report = count_report(g(2, 5), "egf")
    assert (report.p, report.h, report.v, report.r, report.s) == (22277080, 7770, 12976, 7770, 234)


def test_report_square_drops_w_and_c():
    report = count_report(g(1, 1), "egf")
    assert report.values() == {"P": 2, "H": 2, "V": 2, "R": 2, "S": 2}
    assert report.w is None and report.c is None


def test_report_square_with_explicit_w():
    with pytest.raises(SquareShapeError):
        count_report(g(4, 4), "egf", quantities=["W"])


def test_report_auto_cross_checks_every_path():
    report = count_report(g(2, 3), "auto")
    assert report.failed_checks == []
    assert report.confirmed_by() == ["oracle", "orbit-type", "sum"]
    assert report.confirmed_by("S") == ["oracle", "orbit-type"]
    assert report.w == 1516


def test_report_auto_skips_oracle_when_disabled():
    report = count_report(g(2, 3), "auto", oracle=False)
    assert "oracle" not in report.confirmed_by()


def test_report_auto_notes_full_symmetry_scope():
    report = count_report(g(2, 6), "auto", quantities=["S"])
    assert report.s == 611
    assert any("635" in note for note in report.notes)


def test_report_sum_method():
    report = count_report(g(3, 1), "sum")
    assert report.values() == {"P": 30, "H": 8, "V": 30, "R": 8, "W": 19}
    with pytest.raises(MethodUnavailableError):
        count_report(g(3, 1), "sum", quantities=["S"])
    with pytest.raises(MethodUnavailableError):
        count_report(g(3, 1), "sum", quantities=["C"])
    assert count_report(g(2, 2), "sum", quantities=["S"]).s == 6


def test_report_oracle_method():
    report = count_report(g(3, 1), "oracle")
    assert report.values() == {"P": 30, "H": 8, "V": 30, "R": 8, "S": 8, "W": 19, "C": 0}
    assert report.failed_checks == []
    with patch.object(config, "ORACLE_MAX_CELLS", 2):
        with pytest.raises(OracleLimitError):
            count_report(g(3, 1), "oracle")


def test_report_orbit_type_method():
    report = count_report(g(2, 6), "orbit-type", quantities=["S"])
    assert report.s == 635
    assert report.methods == {"S": "orbit-type"}


def test_report_rejects_unknown_input():
    with pytest.raises(MethodUnavailableError):
        count_report(g(2, 3), "guess")
    with pytest.raises(ValueError):
        count_report(g(2, 3), "egf", quantities=["Q"])


def test_report_keeps_only_requested_quantities():
    report = count_report(g(2, 3), "egf", quantities=["W"])
    assert report.values() == {"W": 1516}
    assert list(report.methods) == ["W"]


def test_package_level_entry_points():
    report = wordrep.count_report(wordrep.shape(3, 1), "egf", quantities=["W"])
    assert report.w == 19
    assert wordrep.shape(2, 5) == GridShape(m=2, n=5)
    with pytest.raises(ValueError):
        wordrep.shape(0, 4)
