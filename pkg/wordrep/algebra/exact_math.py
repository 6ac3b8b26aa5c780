#!/usr/bin/env python3

"""
exact_math.py

Exact integer and rational building blocks for counting circled-letter arrays.

Functions:
- factorial(k)            : k!
- binomial(n, k)          : C(n, k), zero outside 0 <= k <= n
- stirling2(n, t)         : Stirling numbers of the second kind, from the
                            recurrence {n, t} = t {n-1, t} + {n-1, t-1}
- p_count(j, N, c)        : circled partitions of N cells into c blocks whose
                            circled cells are a fixed set of j cells, read off
                            the generating function e^{jz} (e^z - 1)^{c-j} / (c-j)!
- p_count_sum(j, N, c)    : the same number as an explicit binomial/Stirling sum
- circled_total(N)        : all circled partitions of N cells, summed over the
                            number of blocks and circles

Natural numbers are Python ints and rationals are `fractions.Fraction`; nothing
in this module touches floating point.

Dependencies:
- wordrep.algebra.series (p_count)
- functools, math
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List

from wordrep.algebra.series import TruncatedSeries

Natural = int


def factorial(k: int) -> Natural:
    if k < 0:
        raise ValueError(f"factorial of a negative number: {k}")
    return math.factorial(k)


def binomial(n: int, k: int) -> Natural:
    if n < 0:
        raise ValueError(f"binomial with negative n: {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> List[int]:
    if n == 0:
        return [1]
    previous = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for t in range(1, n + 1):
        row[t] = t * (previous[t] if t < n else 0) + previous[t - 1]
    return row


def stirling2(n: int, t: int) -> Natural:
    """Number of partitions of an n-set into t non-empty blocks."""
    if n < 0 or t < 0:
        raise ValueError(f"stirling2 needs non-negative arguments, got ({n}, {t})")
    if t > n:
        return 0
    # Build rows bottom-up so deep n never hits the recursion limit.
    for k in range(n):
        _stirling_row(k)
    return _stirling_row(n)[t]


@lru_cache(maxsize=None)
def p_count(j: int, N: int, c: int) -> Natural:
    """(N-j)! [z^(N-j)] e^{jz} (e^z - 1)^(c-j) / (c-j)!."""
    if min(j, N, c) < 0:
        raise ValueError(f"p_count needs non-negative arguments, got ({j}, {N}, {c})")
    if j > c or c > N or j > N:
        return 0
    free = N - j
    caps = (0, 0, free)
    blocks = (TruncatedSeries.exp_linear(0, 0, 1, caps) - 1) ** (c - j)
    egf = TruncatedSeries.exp_linear(0, 0, j, caps) * blocks
    value = egf.coeff((0, 0, free)) * factorial(free) / factorial(c - j)
    if value.denominator != 1:
        raise ArithmeticError(f"p_count({j}, {N}, {c}) is not integral: {value}")
    return value.numerator


def p_count_sum(j: int, N: int, c: int) -> Natural:
    """Sum over p of C(N-j, p) {N-j-p, c-j} j^p.

    p counts uncircled cells that join one of the j circled blocks; the other
    N-j-p cells form the c-j uncircled blocks.
    """
    if min(j, N, c) < 0:
        raise ValueError(f"p_count_sum needs non-negative arguments, got ({j}, {N}, {c})")
    if j > c or c > N or j > N:
        return 0
    return sum(
        binomial(N - j, p) * stirling2(N - j - p, c - j) * j ** p
        for p in range(0, N - c + 1)
    )


def circled_total(N: int, *, closed_sum: bool = False) -> Natural:
    """All circled partitions of N cells: sum over c and j of C(N, j) p_j(N, c).

    j starts at 0 so that arrays without circles are counted.
    """
    counter = p_count_sum if closed_sum else p_count
    if N == 0:
        return 1
    return sum(
        binomial(N, j) * counter(j, N, c)
        for c in range(1, N + 1)
        for j in range(0, c + 1)
    )
