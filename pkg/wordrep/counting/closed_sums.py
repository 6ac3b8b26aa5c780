#!/usr/bin/env python3

"""
closed_sums.py

Direct evaluation of the explicit multi-index summations for P, H, R and S, as
a computation path independent of the generating-function engine.

Features:
- sum_p          : total over c and j of C(N, j) p_j(N, c), j starting at 0
- sum_h_even     : four-index sum over the top half of an even-height grid
- sum_h_odd      : nine-index sum with the fixed middle row
- sum_r_oddodd   : five-index sum over the two L shapes plus the centre square
- sum_s_eveneven : four-index sum over one quadrant (q and s start at 0)
- sum_quantity   : dispatcher used by `--method sum`, with the parity
                   reductions of V and R to H

The p_j(N, c) factors come from the binomial/Stirling sum (p_count_sum), so a
fault in the Stirling table shows up here and not in the series engine.
Powers of 2 with negative exponents are exact Fractions; every total is checked
for integrality before it is returned.

Dependencies:
- wordrep.algebra.exact_math
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache

from wordrep.algebra import exact_math
from wordrep.algebra.exact_math import factorial
from wordrep.counting.models import GridShape
from wordrep.exceptions import InconsistencyError, MethodUnavailableError

logger = logging.getLogger(__name__)

TWO = Fraction(2)


def _integral(total: Fraction, label: str, shape: GridShape) -> int:
    if total.denominator != 1 or total < 0:
        raise InconsistencyError(f"{label} at {shape} is not a non-negative integer: {total}")
    return total.numerator


def _p(j: int, N: int, c: int) -> int:
    # Read through the module so a patched Stirling table reaches every sum.
    return exact_math.p_count_sum(j, N, c)


@lru_cache(maxsize=None)
def _pairing_weight(a: int, i: int) -> Fraction:
    """Sum over t and w of 2^(a-t-3w) / (t! (i-t)! w! (a-t-2w)!).

    a letters of the fundamental region are not circled there; t of them pair
    with one of the i circled letters, w pairs of them merge across the axis.
    """
    total = Fraction(0)
    for t in range(0, min(a, i) + 1):
        for w in range(0, (a - t) // 2 + 1):
            total += TWO ** (a - t - 3 * w) / (
                factorial(t) * factorial(i - t) * factorial(w) * factorial(a - t - 2 * w)
            )
    return total


# ==========================================
# P
# ==========================================
def sum_p(shape: GridShape) -> int:
    return exact_math.circled_total(shape.cells, closed_sum=True)


# ==========================================
# H on even and odd heights
# ==========================================
def sum_h_even(shape: GridShape) -> int:
    if shape.m % 2:
        raise ValueError(f"sum_h_even needs an even number of rows, got {shape}")
    half = (shape.m // 2) * shape.n
    total = Fraction(0)
    for j in range(1, half + 1):
        for q in range(0, j + 1):
            p = _p(q, half, j)
            if not p:
                continue
            total += (
                Fraction(factorial(half) * p * factorial(j - q), factorial(half - q))
                * _pairing_weight(j - q, q)
            )
    return _integral(total, "sum_h_even", shape)


def _middle_row_weight(q: int, n: int) -> Fraction:
    """Sum over k, E, v, l of the middle-row factor of the odd-height sum.

    k cells of the middle row carry the q letters shared with the top half
    (E of them circled); the other n - k cells hold v letters of their own.
    """
    total = Fraction(0)
    for k in range(q, n + 1):
        for E in range(0, q + 1):
            shared = _p(E, k, q)
            if not shared:
                continue
            for v in range(min(n - k, 1), n - k + 1):
                for l in range(0, v + 1):
                    own = _p(l, n - k, v)
                    if not own:
                        continue
                    total += Fraction(
                        factorial(n) * shared * own,
                        factorial(E) * factorial(k - E) * factorial(n - k - l) * factorial(l),
                    )
    return total


def sum_h_odd(shape: GridShape) -> int:
    if shape.m % 2 == 0:
        raise ValueError(f"sum_h_odd needs an odd number of rows, got {shape}")
    n = shape.n
    half = (shape.m // 2) * n
    middle = {q: _middle_row_weight(q, n) for q in range(0, n + 1)}
    total = Fraction(0)
    # j starts at 0: a single row has no letters above the middle row.
    for j in range(0, half + 1):
        for i in range(0, j + 1):
            p = _p(i, half, j)
            if not p:
                continue
            head = Fraction(factorial(half) * p * factorial(j - i), factorial(half - i))
            for q in range(0, min(j - i, n) + 1):
                total += head * middle[q] * _pairing_weight(j - i - q, i)
    return _integral(total, "sum_h_odd", shape)


# ==========================================
# R on odd x odd grids
# ==========================================
def rotation_half_size(shape: GridShape) -> int:
    """N = n floor(m/2) + floor(n/2), the cells of one L shape."""
    return shape.n * (shape.m // 2) + shape.n // 2


def sum_r_oddodd(shape: GridShape) -> int:
    if shape.m % 2 == 0 or shape.n % 2 == 0:
        raise ValueError(f"sum_r_oddodd needs odd x odd, got {shape}")
    N = rotation_half_size(shape)
    total = Fraction(0)
    # j starts at 0 so that N = 0 (the single centre square) yields 2.
    for j in range(0, N + 1):
        for i in range(0, j + 1):
            p = _p(i, N, j)
            if not p:
                continue
            head = Fraction(factorial(N) * p * factorial(j - i), factorial(N - i))
            for q in range(0, j - i + 1):
                for t in range(0, min(i, j - i - q) + 1):
                    for s in range(0, (j - i - q - t) // 2 + 1):
                        total += head * (1 + q) * TWO ** (1 - s) / (
                            factorial(t)
                            * factorial(q)
                            * factorial(i - t)
                            * factorial(s)
                            * factorial(j - i - q - t - 2 * s)
                        )
    return _integral(total, "sum_r_oddodd", shape)


# ==========================================
# S on even x even grids
# ==========================================
def sum_s_eveneven(shape: GridShape) -> int:
    if shape.m % 2 or shape.n % 2:
        raise ValueError(f"sum_s_eveneven needs even x even, got {shape}")
    quadrant = (shape.m // 2) * (shape.n // 2)
    total = Fraction(0)
    for j in range(1, quadrant + 1):
        # q and s start at 0: the all-uncircled array has no singleton circles.
        for q in range(0, j + 1):
            p = _p(q, quadrant, j)
            if not p:
                continue
            head = Fraction(factorial(quadrant) * p * factorial(j - q), factorial(quadrant - q))
            for l in range(0, min(q, j - q) + 1):
                for s in range(0, (j - q - l) // 2 + 1):
                    total += head * Fraction(
                        3 ** (l + s) * 5 ** (j - q - l - 2 * s),
                        factorial(l) * factorial(q - l) * factorial(s) * factorial(j - q - l - 2 * s),
                    )
    return _integral(total, "sum_s_eveneven", shape)


# ==========================================
# Dispatcher for `--method sum`
# ==========================================
def sum_h(shape: GridShape) -> int:
    return sum_h_odd(shape) if shape.m % 2 else sum_h_even(shape)


def sum_r(shape: GridShape) -> int:
    if shape.m % 2 == 0:
        return sum_h(shape)
    if shape.n % 2 == 0:
        return sum_h(shape.transpose())
    return sum_r_oddodd(shape)


def has_closed_sum(shape: GridShape, quantity: str) -> bool:
    if quantity == "S":
        return shape.m % 2 == 0 and shape.n % 2 == 0
    if quantity == "C":
        return has_closed_sum(shape, "S")
    return quantity in ("P", "H", "V", "R", "W")


def sum_quantity(shape: GridShape, quantity: str) -> int:
    """P, H, V, R or S by closed summation (W and C are derived by the caller)."""
    if quantity == "P":
        return sum_p(shape)
    if quantity == "H":
        return sum_h(shape)
    if quantity == "V":
        return sum_h(shape.transpose())
    if quantity == "R":
        return sum_r(shape)
    if quantity == "S":
        if not has_closed_sum(shape, "S"):
            raise MethodUnavailableError(
                f"no closed sum for S on {shape}; only even x even grids have one "
                "(use --method egf or --method orbit-type)"
            )
        return sum_s_eveneven(shape)
    raise MethodUnavailableError(f"no closed sum for quantity {quantity!r}")
