#!/usr/bin/env python3

"""
orbit_types.py

Exact fixed-point counts for any subgroup U of D2 from an exponential generating
function organised by cell-orbit stabilizers.

A U-invariant circled array is built from block orbits. A block orbit whose block
stabilizer is H may only use cell orbits whose stabilizer is contained in H; inside
each such cell orbit it picks one H-orbit, so a block orbit touching r cell orbits
comes in |U:H|^(r-1) labelled variants. A circled block orbit needs its circled
cell fixed by H, i.e. a cell whose stabilizer is exactly H. Summed over H:

    exponent = sum over H <= U of  (exp(d S_H) - 1) / d  +  v_H exp(d S_H)

with d = |U:H|, S_H the sum of the variables of the cell classes contained in H
and v_H the variable of the class with stabilizer exactly H (0 if absent).

Cell classes: the free class (trivial stabilizer) always uses z, the others use
x and y. A class with stabilizer U that holds a single cell orbit (the centre of
an odd x odd grid under rotation) is integrated out: the count doubles and S_U is
added to the exponent. That doubling is the normalisation constant needed by the
odd x odd rotation and full-symmetry generating functions.

This path agrees with P, H, V and R from the published generating functions on
every shape and with the oracle everywhere. For S it agrees with the published
generating functions only while the quadrant floor(m/2) floor(n/2) has at most
two cells; beyond that they leave out block orbits spanning three or more quadrant
cells (first at 2x6: 611 against 635).

Dependencies:
- wordrep.algebra.series
- wordrep.oracle.enumeration (SymmetryOp and cell permutations)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from wordrep.algebra.exact_math import factorial
from wordrep.algebra.series import TruncatedSeries
from wordrep.counting.models import GridShape
from wordrep.exceptions import InconsistencyError
from wordrep.oracle.enumeration import SUBGROUPS, SymmetryOp, generated_subgroup

logger = logging.getLogger(__name__)

Subgroup = FrozenSet[SymmetryOp]
TRIVIAL: Subgroup = frozenset({SymmetryOp.IDENTITY})

# Variable order for the non-free classes; the free class is always z.
_SIDE_VARIABLES = ("x", "y")
_CLASS_ORDER = {
    frozenset({SymmetryOp.IDENTITY, SymmetryOp.VERTICAL}): 0,
    frozenset({SymmetryOp.IDENTITY, SymmetryOp.HORIZONTAL}): 1,
    frozenset({SymmetryOp.IDENTITY, SymmetryOp.ROTATE180}): 2,
}


@dataclass(frozen=True)
class OrbitClass:
    """All cell orbits sharing one stabilizer."""

    stabilizer: Subgroup
    size: int
    variable: Optional[str]

    @property
    def integrated(self) -> bool:
        return self.variable is None


def _subgroups_of(group: Subgroup) -> List[Subgroup]:
    return [TRIVIAL] + [h for h in SUBGROUPS if h <= group]


@lru_cache(maxsize=None)
def _orbit_classes(m: int, n: int, group: Subgroup) -> Tuple[OrbitClass, ...]:
    grid = GridShape(m=m, n=n)
    perms = {op: op.cell_map(grid) for op in group}
    seen = set()
    sizes: Dict[Subgroup, int] = {}
    for cell in range(grid.cells):
        if cell in seen:
            continue
        seen.update(perm[cell] for perm in perms.values())
        stabilizer = frozenset(op for op, perm in perms.items() if perm[cell] == cell)
        sizes[stabilizer] = sizes.get(stabilizer, 0) + 1

    classes = []
    side = [s for s in sizes if s != TRIVIAL and not (s == group and sizes[s] == 1)]
    if len(side) > len(_SIDE_VARIABLES):
        raise InconsistencyError(f"{len(side)} stabilized cell classes on {grid}")
    side.sort(key=lambda s: _CLASS_ORDER.get(s, len(_CLASS_ORDER)))
    names = dict(zip(side, _SIDE_VARIABLES))
    for stabilizer, size in sizes.items():
        if stabilizer == TRIVIAL:
            variable = "z"
        else:
            variable = names.get(stabilizer)
        classes.append(OrbitClass(stabilizer=stabilizer, size=size, variable=variable))
    return tuple(classes)


def orbit_classes(shape: GridShape, ops: Iterable[SymmetryOp]) -> Tuple[OrbitClass, ...]:
    """Cell-orbit classes of the subgroup generated by ops, keyed by stabilizer."""
    return _orbit_classes(shape.m, shape.n, generated_subgroup(ops))


def _caps(classes: Iterable[OrbitClass]) -> Tuple[int, int, int]:
    caps = {"x": 0, "y": 0, "z": 0}
    for cls in classes:
        if not cls.integrated:
            caps[cls.variable] = cls.size
    return caps["x"], caps["y"], caps["z"]


def orbit_type_exponent(shape: GridShape, ops: Iterable[SymmetryOp]) -> TruncatedSeries:
    group = generated_subgroup(ops)
    classes = orbit_classes(shape, group)
    caps = _caps(classes)
    variables = {
        cls.stabilizer: TruncatedSeries.variable(cls.variable, caps)
        for cls in classes
        if not cls.integrated
    }
    exponent = TruncatedSeries.zero(caps)
    for sub in _subgroups_of(group):
        index = len(group) // len(sub)
        spread = TruncatedSeries.zero(caps)
        for stabilizer, var in variables.items():
            if stabilizer <= sub:
                spread = spread + var
        grown = (spread * index).exp()
        exponent = exponent + (grown - 1) / index
        if sub in variables:
            exponent = exponent + variables[sub] * grown
    if any(cls.integrated for cls in classes):
        for var in variables.values():
            exponent = exponent + var
    return exponent


def count_fixed_by_orbit_types(shape: GridShape, ops: Iterable[SymmetryOp] = ()) -> int:
    """Arrays fixed by the subgroup generated by ops (P when ops is empty)."""
    group = generated_subgroup(ops)
    classes = orbit_classes(shape, group)
    factor = 2 if any(cls.integrated for cls in classes) else 1
    series = orbit_type_exponent(shape, group).exp()
    coefficient = series.coeff(_caps(classes))
    value = coefficient * factor * prod(factorial(cls.size) for cls in classes if not cls.integrated)
    value = Fraction(value)
    if value.denominator != 1:
        raise InconsistencyError(f"orbit-type count on {shape} is not integral: {value}")
    logger.debug("Orbit-type count on %s for %s: %d", shape, sorted(op.value for op in group), value)
    return value.numerator


def quadrant_size(shape: GridShape) -> int:
    return (shape.m // 2) * (shape.n // 2)
