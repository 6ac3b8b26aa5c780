from unittest.mock import patch

import pytest

from wordrep import config
from wordrep.counting import egf_counts, orbit_types
from wordrep.counting.models import GridShape, shapes_up_to
from wordrep.counting.orbit_types import (
    TRIVIAL,
    count_fixed_by_orbit_types,
    orbit_classes,
    quadrant_size,
)
from wordrep.oracle import enumeration
from wordrep.oracle.enumeration import FULL_GROUP, SymmetryOp

H, V, R = SymmetryOp.HORIZONTAL, SymmetryOp.VERTICAL, SymmetryOp.ROTATE180
BOTH = (H, V)


def g(m, n):
    return GridShape(m=m, n=n)


# -----------------------------
# 1. Cell classes
# -----------------------------
def test_classes_of_3x3_under_full_symmetry():
    classes = {(c.stabilizer, c.size, c.variable) for c in orbit_classes(g(3, 3), BOTH)}
    assert classes == {
        (TRIVIAL, 1, "z"),
        (frozenset({SymmetryOp.IDENTITY, V}), 1, "x"),
        (frozenset({SymmetryOp.IDENTITY, H}), 1, "y"),
        (FULL_GROUP, 1, None),
    }


def test_classes_of_even_grid_are_all_free():
    classes = orbit_classes(g(2, 6), BOTH)
    assert [(c.stabilizer, c.size) for c in classes] == [(TRIVIAL, 3)]


def test_rotation_centre_is_integrated():
    classes = orbit_classes(g(3, 1), [R])
    assert sorted((c.size, c.integrated) for c in classes) == [(1, False), (1, True)]


def test_no_ops_means_every_cell_is_its_own_class():
    classes = orbit_classes(g(2, 3), [])
    assert [(c.stabilizer, c.size, c.variable) for c in classes] == [(TRIVIAL, 6, "z")]


def test_quadrant_size():
    assert quadrant_size(g(2, 6)) == 3
    assert quadrant_size(g(3, 5)) == 2
    assert quadrant_size(g(1, 9)) == 0


# -----------------------------
# 2. Agreement with the generating functions and the oracle
# -----------------------------
def test_exponent_without_symmetry_is_the_p_exponent():
    caps = (0, 0, 4)
    assert orbit_types.orbit_type_exponent(g(1, 4), []) == egf_counts.p_exponent(caps)


@pytest.mark.parametrize("shape", shapes_up_to(12), ids=str)
def test_matches_egf_for_single_operations(shape):
    for quantity in ("P", "H", "V", "R"):
        counter = egf_counts.EGF_COUNTERS[quantity]
        assert count_fixed_by_orbit_types(shape, egf_counts.SUBGROUP_OF[quantity]) == counter(shape)


def test_matches_egf_for_full_symmetry_on_small_quadrants():
    for shape in shapes_up_to(20):
        if quadrant_size(shape) <= 2:
            assert count_fixed_by_orbit_types(shape, BOTH) == egf_counts.count_s(shape)


def test_full_symmetry_beyond_two_quadrant_cells():
    assert egf_counts.count_s(g(2, 6)) == 611
    assert count_fixed_by_orbit_types(g(2, 6), BOTH) == 635
    assert count_fixed_by_orbit_types(g(6, 2), BOTH) == 635


@pytest.mark.parametrize("shape", shapes_up_to(8), ids=str)
def test_matches_oracle(shape):
    survey = enumeration.survey(shape)
    assert count_fixed_by_orbit_types(shape) == survey.total
    for ops in ([H], [V], [R], [H, V]):
        assert count_fixed_by_orbit_types(shape, ops) == survey.fixed_by(ops)


@pytest.mark.slow
def test_oracle_confirms_the_2x6_full_symmetry_count():
    with patch.object(config, "ORACLE_MAX_CELLS", 12):
        assert enumeration.count_fixed(g(2, 6), BOTH) == 635
