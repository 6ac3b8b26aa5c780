#!/usr/bin/env python3

"""
enumeration.py

Brute-force ground truth for circled-letter arrays and the D2 symmetry action.

A circled-letter array on an m x n grid is a set partition of the cells (stored
as a restricted-growth string over the cells in row-major order) together with
a set of circled cells, at most one per block. Letters are only labels, so
canonical restricted-growth labelling turns "same array" into tuple equality.

This module provides:
1. SymmetryOp: identity, horizontal reflection, vertical reflection and 180
   degree rotation, with their cell permutations (numpy flips of the grid index).
2. CircledPartition and act(): the group action, re-canonicalising labels.
3. enumerate_partitions(): every restricted-growth string, refusing grids above
   `config.ORACLE_MAX_CELLS`.
4. count_all / count_fixed / count_orbits: P, fixed-point counts per subgroup and
   the number of D2 orbits, all from one pass over the partitions (survey()).
5. count_fixed_naive(): an independent path that enumerates every circle
   assignment and tests invariance with act() directly (small grids only).

Dependencies:
- numpy
- tqdm
- wordrep.config
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import prod
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from wordrep import config
from wordrep.counting.models import GridShape
from wordrep.exceptions import OracleLimitError

logger = logging.getLogger(__name__)

Labels = Tuple[int, ...]
Permutation = Tuple[int, ...]


# ==========================================
# 1. Symmetry operations
# ==========================================
class SymmetryOp(Enum):
    IDENTITY = "identity"
    HORIZONTAL = "horizontalReflect"
    VERTICAL = "verticalReflect"
    ROTATE180 = "rotate180"

    @property
    def bits(self) -> int:
        return _OP_BITS[self]

    def compose(self, other: "SymmetryOp") -> "SymmetryOp":
        """C2 x C2: composing two ops xors their generator bits."""
        return _OPS_BY_BITS[self.bits ^ other.bits]

    def cell_map(self, shape: GridShape) -> Permutation:
        """perm[i] is the row-major index of the image of cell i."""
        return _cell_map(self, shape.m, shape.n)


_OP_BITS = {
    SymmetryOp.IDENTITY: 0,
    SymmetryOp.HORIZONTAL: 1,
    SymmetryOp.VERTICAL: 2,
    SymmetryOp.ROTATE180: 3,
}
_OPS_BY_BITS = {bits: op for op, bits in _OP_BITS.items()}
NON_IDENTITY = (SymmetryOp.HORIZONTAL, SymmetryOp.VERTICAL, SymmetryOp.ROTATE180)


@lru_cache(maxsize=None)
def _cell_map(op: SymmetryOp, m: int, n: int) -> Permutation:
    grid = np.arange(m * n).reshape(m, n)
    if op is SymmetryOp.HORIZONTAL:
        image = np.flipud(grid)
    elif op is SymmetryOp.VERTICAL:
        image = np.fliplr(grid)
    elif op is SymmetryOp.ROTATE180:
        image = grid[::-1, ::-1]
    else:
        image = grid
    return tuple(int(i) for i in image.ravel())


def generated_subgroup(ops: Iterable[SymmetryOp]) -> FrozenSet[SymmetryOp]:
    """Closure of ops under composition, identity included."""
    group = {SymmetryOp.IDENTITY}
    frontier = set(ops)
    while frontier:
        group |= frontier
        frontier = {a.compose(b) for a in group for b in group} - group
    return frozenset(group)


FULL_GROUP = generated_subgroup(NON_IDENTITY)
SUBGROUPS = (
    generated_subgroup([SymmetryOp.HORIZONTAL]),
    generated_subgroup([SymmetryOp.VERTICAL]),
    generated_subgroup([SymmetryOp.ROTATE180]),
    FULL_GROUP,
)


# ==========================================
# 2. Circled partitions and the group action
# ==========================================
def canonical_labels(labels: Iterable[int]) -> Labels:
    """Relabel blocks so first occurrences read 0, 1, 2, ... (restricted growth)."""
    mapping: Dict[int, int] = {}
    return tuple(mapping.setdefault(label, len(mapping)) for label in labels)


def is_restricted_growth(labels: Sequence[int]) -> bool:
    highest = -1
    for label in labels:
        if label < 0 or label > highest + 1:
            return False
        highest = max(highest, label)
    return True


@dataclass(frozen=True)
class CircledPartition:
    shape: GridShape
    blocks: Labels
    circled: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.blocks) != self.shape.cells:
            raise ValueError(f"{len(self.blocks)} labels for a {self.shape} grid")
        if not is_restricted_growth(self.blocks):
            raise ValueError(f"not a restricted-growth string: {self.blocks}")
        circled_blocks = [self.blocks[cell] for cell in self.circled]
        if len(set(circled_blocks)) != len(circled_blocks):
            raise ValueError("a block carries more than one circle")


def _permute_labels(blocks: Labels, perm: Permutation) -> Labels:
    moved = [0] * len(blocks)
    for cell, label in enumerate(blocks):
        moved[perm[cell]] = label
    return canonical_labels(moved)


def act(op: SymmetryOp, array: CircledPartition) -> CircledPartition:
    perm = op.cell_map(array.shape)
    return CircledPartition(
        shape=array.shape,
        blocks=_permute_labels(array.blocks, perm),
        circled=frozenset(perm[cell] for cell in array.circled),
    )


# ==========================================
# 3. Partition enumeration
# ==========================================
def _check_limit(shape: GridShape, limit: int) -> None:
    if shape.cells > limit:
        raise OracleLimitError(
            f"{shape} has {shape.cells} cells; enumeration is limited to {limit} "
            "(set WORDREP_ORACLE_MAX_CELLS to raise it)"
        )


def _restricted_growth_strings(size: int) -> Iterator[Labels]:
    if size == 0:
        yield ()
        return
    labels = [0] * size
    running_max = [0] * size
    while True:
        yield tuple(labels)
        i = size - 1
        while i > 0 and labels[i] > running_max[i - 1]:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        running_max[i] = max(running_max[i - 1], labels[i])
        for k in range(i + 1, size):
            labels[k] = 0
            running_max[k] = running_max[i]


def enumerate_partitions(shape: GridShape) -> Iterator[Labels]:
    """Every set partition of the cells, in lexicographic restricted-growth order."""
    _check_limit(shape, config.ORACLE_MAX_CELLS)
    return _restricted_growth_strings(shape.cells)


def _block_members(blocks: Labels) -> List[List[int]]:
    members: List[List[int]] = [[] for _ in range(max(blocks, default=-1) + 1)]
    for cell, label in enumerate(blocks):
        members[label].append(cell)
    return members


def circled_weight(blocks: Labels) -> int:
    """Circle assignments with at most one circle per block: prod of (1 + block size)."""
    return prod(1 + size for size in Counter(blocks).values())


def _fixed_weight(blocks: Labels, perms: Sequence[Permutation]) -> int:
    """Circle assignments fixed by a group under which `blocks` is invariant.

    Each block orbit contributes 1 + (cells of its smallest-label block that are
    fixed by that block's stabilizer); a free block orbit therefore contributes
    1 + block size.
    """
    weight = 1
    for label, cells in enumerate(_block_members(blocks)):
        stabilizer = []
        for perm in perms:
            image = blocks[perm[cells[0]]]
            if image < label:
                break
            if image == label:
                stabilizer.append(perm)
        else:
            weight *= 1 + sum(1 for cell in cells if all(p[cell] == cell for p in stabilizer))
    return weight


def _assignments(blocks: Labels) -> Iterator[Tuple[int, ...]]:
    choices = [(None, *cells) for cells in _block_members(blocks)]
    for picked in itertools.product(*choices):
        yield tuple(sorted(cell for cell in picked if cell is not None))


def _assignment_orbits(blocks: Labels, weight: int, stabilizer: Sequence[Permutation]) -> int:
    if not stabilizer:
        return weight
    count = 0
    for circled in _assignments(blocks):
        if all(circled <= tuple(sorted(p[c] for c in circled)) for p in stabilizer):
            count += 1
    return count


# ==========================================
# 4. Survey: P, fixed counts and orbits in one pass
# ==========================================
@dataclass(frozen=True)
class OracleSurvey:
    shape: GridShape
    total: int
    fixed: Dict[FrozenSet[SymmetryOp], int]
    orbits: int

    def fixed_by(self, ops: Iterable[SymmetryOp]) -> int:
        subgroup = generated_subgroup(ops)
        if subgroup == {SymmetryOp.IDENTITY}:
            return self.total
        return self.fixed[subgroup]


@lru_cache(maxsize=64)
def _survey(m: int, n: int) -> OracleSurvey:
    grid = GridShape(m=m, n=n)
    perms = {op: op.cell_map(grid) for op in NON_IDENTITY}
    subgroup_perms = {
        group: [perms[op] for op in NON_IDENTITY if op in group] for group in SUBGROUPS
    }
    total = 0
    orbits = 0
    fixed = {group: 0 for group in SUBGROUPS}
    partitions = _restricted_growth_strings(grid.cells)
    for blocks in tqdm(partitions, desc=f"Enumerating {grid}", leave=False, disable=None):
        weight = circled_weight(blocks)
        total += weight
        images = {op: _permute_labels(blocks, perm) for op, perm in perms.items()}
        invariant = {op for op, image in images.items() if image == blocks}
        for group, group_perms in subgroup_perms.items():
            if all(op in invariant for op in group if op is not SymmetryOp.IDENTITY):
                fixed[group] += _fixed_weight(blocks, group_perms)
        if all(blocks <= image for image in images.values()):
            orbits += _assignment_orbits(blocks, weight, [perms[op] for op in invariant])
    logger.debug("Oracle survey of %s: P=%d orbits=%d", grid, total, orbits)
    return OracleSurvey(shape=grid, total=total, fixed=fixed, orbits=orbits)


def survey(shape: GridShape) -> OracleSurvey:
    _check_limit(shape, config.ORACLE_MAX_CELLS)
    return _survey(shape.m, shape.n)


def count_all(shape: GridShape) -> int:
    return survey(shape).total


def count_fixed(shape: GridShape, ops: Iterable[SymmetryOp]) -> int:
    """Arrays fixed by every op in a non-empty set of non-identity ops."""
    ops = list(ops)
    if not ops or SymmetryOp.IDENTITY in ops:
        raise ValueError("count_fixed needs a non-empty set of non-identity ops")
    return survey(shape).fixed_by(ops)


def count_orbits(shape: GridShape) -> int:
    """Number of D2 orbits, by minimum-image representatives."""
    return survey(shape).orbits


# ==========================================
# 5. Naive path: enumerate every array, test act() directly
# ==========================================
@lru_cache(maxsize=64)
def _naive_fixed(m: int, n: int) -> Dict[FrozenSet[SymmetryOp], int]:
    grid = GridShape(m=m, n=n)
    counts = {group: 0 for group in SUBGROUPS}
    for blocks in _restricted_growth_strings(grid.cells):
        for circled in _assignments(blocks):
            array = CircledPartition(shape=grid, blocks=blocks, circled=frozenset(circled))
            invariant = {op for op in NON_IDENTITY if act(op, array) == array}
            for group in SUBGROUPS:
                if all(op in invariant for op in group if op is not SymmetryOp.IDENTITY):
                    counts[group] += 1
    return counts


def count_fixed_naive(shape: GridShape, ops: Iterable[SymmetryOp]) -> int:
    _check_limit(shape, config.NAIVE_MAX_CELLS)
    subgroup = generated_subgroup(ops)
    if subgroup == {SymmetryOp.IDENTITY}:
        raise ValueError("count_fixed_naive needs at least one non-identity op")
    return _naive_fixed(shape.m, shape.n)[subgroup]
