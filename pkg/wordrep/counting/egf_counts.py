#!/usr/bin/env python3

"""
egf_counts.py

P, H, V, R, S, W and C for an m x n grid from the exponential generating
functions, plus CountReport assembly across every computation path.

Features:
- One exponent builder per generating function (P, Heven, Hodd, Roddodd, See,
  Seo, Soo); each is checked for a zero constant term before exp() is taken.
- EGF normalisation: the extracted coefficient is multiplied by the factorial of
  every tracked cell count.
- Parity dispatch and transpose reductions: V(m, n) = H(n, m); R reduces to H
  unless both sides are odd; S on odd x even is S of the transpose.
- The odd x odd rotation and full-symmetry functions are scaled by the audited
  centre-cell constants `config.ROTATION_CENTER_FACTOR` and
  `config.FULL_SYMMETRY_CENTER_FACTOR`.
- count_report(): computes the requested quantities by one method (egf, sum,
  oracle, orbit-type) or by `auto` (EGF values cross-checked against every other
  path within its limits) and records the report invariants as CrossChecks.

Dependencies:
- wordrep.algebra.series / exact_math
- wordrep.counting.closed_sums / orbit_types
- wordrep.oracle.enumeration
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from wordrep import config
from wordrep.algebra.exact_math import factorial
from wordrep.algebra.series import Caps, TruncatedSeries
from wordrep.counting import closed_sums, orbit_types
from wordrep.counting.models import QUANTITIES, CountReport, CrossCheck, GridShape
from wordrep.exceptions import InconsistencyError, MethodUnavailableError, SquareShapeError
from wordrep.oracle import enumeration
from wordrep.oracle.enumeration import SymmetryOp

logger = logging.getLogger(__name__)

METHODS = ("auto", "egf", "sum", "oracle", "orbit-type")
BASE_QUANTITIES = ("P", "H", "V", "R", "S")


# ==========================================
# 1. Exponents
# ==========================================
def _e(a, b, c, caps: Caps) -> TruncatedSeries:
    return TruncatedSeries.exp_linear(a, b, c, caps)


def p_exponent(caps: Caps) -> TruncatedSeries:
    """e^z - 1 + z e^z"""
    z = TruncatedSeries.variable("z", caps)
    ez = _e(0, 0, 1, caps)
    return ez - 1 + z * ez


def h_even_exponent(caps: Caps) -> TruncatedSeries:
    """2(e^z - 1) + (e^z - 1)^2 / 2 + z e^{2z}"""
    z = TruncatedSeries.variable("z", caps)
    block = _e(0, 0, 1, caps) - 1
    return block * 2 + block * block / 2 + z * _e(0, 0, 2, caps)


def h_odd_exponent(caps: Caps) -> TruncatedSeries:
    """(y + 1) e^{y+z} + (z + 1/2) e^{2z} - 3/2"""
    y = TruncatedSeries.variable("y", caps)
    z = TruncatedSeries.variable("z", caps)
    return (y + 1) * _e(0, 1, 1, caps) + (z + Fraction(1, 2)) * _e(0, 0, 2, caps) - Fraction(3, 2)


def r_oddodd_exponent(caps: Caps) -> TruncatedSeries:
    """(e^z - 1)^2 / 2 + 2(e^z - 1) + z + z e^{2z}"""
    z = TruncatedSeries.variable("z", caps)
    block = _e(0, 0, 1, caps) - 1
    return block * block / 2 + block * 2 + z + z * _e(0, 0, 2, caps)


def s_eveneven_exponent(caps: Caps) -> TruncatedSeries:
    """3(1 + z) e^{2z} - (2z + 1) e^z - 2"""
    z = TruncatedSeries.variable("z", caps)
    return (z + 1) * _e(0, 0, 2, caps) * 3 - (z * 2 + 1) * _e(0, 0, 1, caps) - 2


def s_evenodd_exponent(caps: Caps) -> TruncatedSeries:
    """(z + 1/2) e^{2x+2z} + (3x + 5/2) e^{2x} - 2(x + 1) e^x + e^{z+x} - 2"""
    x = TruncatedSeries.variable("x", caps)
    z = TruncatedSeries.variable("z", caps)
    return (
        (z + Fraction(1, 2)) * _e(2, 0, 2, caps)
        + (x * 3 + Fraction(5, 2)) * _e(2, 0, 0, caps)
        - (x + 1) * _e(1, 0, 0, caps) * 2
        + _e(1, 0, 1, caps)
        - 2
    )


def s_oddodd_exponent(caps: Caps) -> TruncatedSeries:
    x = TruncatedSeries.variable("x", caps)
    y = TruncatedSeries.variable("y", caps)
    z = TruncatedSeries.variable("z", caps)
    return (
        x + y + z - 2
        + y * _e(0, 2, 2, caps)
        + x * _e(2, 0, 2, caps)
        + z * _e(0, 0, 2, caps) * 3
        - z * _e(0, 0, 1, caps) * 2
        + _e(1, 1, 1, caps)
        - _e(0, 0, 1, caps) * 2
        + _e(0, 0, 2, caps) * 2
        + _e(2, 0, 2, caps) / 2
        + _e(0, 2, 2, caps) / 2
    )


EXPONENTS: Dict[str, Callable[[Caps], TruncatedSeries]] = {
    "P": p_exponent,
    "Heven": h_even_exponent,
    "Hodd": h_odd_exponent,
    "Roddodd": r_oddodd_exponent,
    "See": s_eveneven_exponent,
    "Seo": s_evenodd_exponent,
    "Soo": s_oddodd_exponent,
}


def exponent_for(which: str, caps: Caps) -> TruncatedSeries:
    if which not in EXPONENTS:
        raise KeyError(f"unknown generating function {which!r}; choose from {', '.join(EXPONENTS)}")
    exponent = EXPONENTS[which](caps)
    constant = exponent.coeff((0, 0, 0))
    if constant != 0:
        raise InconsistencyError(f"exponent {which} has constant term {constant}")
    return exponent


@lru_cache(maxsize=None)
def _extract(which: str, degree: Tuple[int, int, int]) -> Fraction:
    return exponent_for(which, degree).exp().coeff(degree)


def _natural(value: Fraction, label: str) -> int:
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise InconsistencyError(f"{label} is not a non-negative integer: {value}")
    return value.numerator


# ==========================================
# 2. Counts
# ==========================================
def count_p(shape: GridShape) -> int:
    N = shape.cells
    return _natural(factorial(N) * _extract("P", (0, 0, N)), f"P{shape}")


def count_h(shape: GridShape) -> int:
    half = (shape.m // 2) * shape.n
    if shape.m % 2 == 0:
        return _natural(factorial(half) * _extract("Heven", (0, 0, half)), f"H{shape}")
    value = factorial(half) * factorial(shape.n) * _extract("Hodd", (0, shape.n, half))
    return _natural(value, f"H{shape}")


def count_v(shape: GridShape) -> int:
    return count_h(shape.transpose())


def count_r(shape: GridShape, *, center_factor: Optional[int] = None) -> int:
    if shape.m % 2 == 0:
        return count_h(shape)
    if shape.n % 2 == 0:
        return count_h(shape.transpose())
    if center_factor is None:
        center_factor = config.ROTATION_CENTER_FACTOR
    N = closed_sums.rotation_half_size(shape)
    return _natural(center_factor * factorial(N) * _extract("Roddodd", (0, 0, N)), f"R{shape}")


def count_s(shape: GridShape, *, center_factor: Optional[int] = None) -> int:
    h, w = shape.m // 2, shape.n // 2
    q = h * w
    if shape.m % 2 == 0 and shape.n % 2 == 0:
        return _natural(factorial(q) * _extract("See", (0, 0, q)), f"S{shape}")
    if shape.m % 2 == 0:
        value = factorial(h) * factorial(q) * _extract("Seo", (q, 0, h))
        return _natural(value, f"S{shape}")
    if shape.n % 2 == 0:
        return count_s(shape.transpose(), center_factor=center_factor)
    if center_factor is None:
        center_factor = config.FULL_SYMMETRY_CENTER_FACTOR
    value = center_factor * factorial(h) * factorial(w) * factorial(q) * _extract("Soo", (h, w, q))
    return _natural(value, f"S{shape}")


def _require_rectangular(shape: GridShape, quantity: str) -> None:
    if shape.is_square:
        raise SquareShapeError(
            f"{quantity} is out of scope for the square shape {shape}: "
            "m = n carries the larger D4 symmetry"
        )


def burnside_quotient(shape: GridShape, p: int, h: int, v: int, r: int) -> int:
    """(P + H + V + R) / 4, refusing a sum that is not divisible by 4."""
    _require_rectangular(shape, "W")
    total = p + h + v + r
    if total % 4:
        raise InconsistencyError(f"P+H+V+R = {total} on {shape} is not divisible by 4")
    return total // 4


def free_orbit_count(p: int, h: int, v: int, r: int, s: int) -> int:
    """Arrays fixed by nothing but the identity: P - (H-S) - (V-S) - (R-S) - S."""
    return p - (h - s) - (v - s) - (r - s) - s


def count_w(shape: GridShape) -> int:
    _require_rectangular(shape, "W")
    return burnside_quotient(shape, count_p(shape), count_h(shape), count_v(shape), count_r(shape))


def count_c(shape: GridShape) -> int:
    _require_rectangular(shape, "C")
    return free_orbit_count(count_p(shape), count_h(shape), count_v(shape), count_r(shape), count_s(shape))


EGF_COUNTERS: Dict[str, Callable[[GridShape], int]] = {
    "P": count_p,
    "H": count_h,
    "V": count_v,
    "R": count_r,
    "S": count_s,
}

SUBGROUP_OF = {
    "P": (),
    "H": (SymmetryOp.HORIZONTAL,),
    "V": (SymmetryOp.VERTICAL,),
    "R": (SymmetryOp.ROTATE180,),
    "S": (SymmetryOp.HORIZONTAL, SymmetryOp.VERTICAL),
}


# ==========================================
# 3. Per-method base values
# ==========================================
def _oracle_values(shape: GridShape, needed: Iterable[str]) -> Dict[str, int]:
    survey = enumeration.survey(shape)
    values = {}
    for quantity in needed:
        ops = SUBGROUP_OF[quantity]
        values[quantity] = survey.total if not ops else survey.fixed_by(ops)
    return values


def _orbit_type_values(shape: GridShape, needed: Iterable[str]) -> Dict[str, int]:
    return {q: orbit_types.count_fixed_by_orbit_types(shape, SUBGROUP_OF[q]) for q in needed}


def _sum_values(shape: GridShape, needed: Iterable[str], explicit: Sequence[str]) -> Dict[str, int]:
    values = {}
    for quantity in needed:
        if closed_sums.has_closed_sum(shape, quantity):
            values[quantity] = closed_sums.sum_quantity(shape, quantity)
        elif quantity in explicit or (quantity == "S" and "C" in explicit):
            closed_sums.sum_quantity(shape, quantity)
        else:
            logger.warning("No closed sum for %s on %s; leaving it out", quantity, shape)
    return values


def _base_values(shape: GridShape, method: str, needed: Sequence[str], explicit: Sequence[str]) -> Dict[str, int]:
    if method in ("auto", "egf"):
        return {q: EGF_COUNTERS[q](shape) for q in needed}
    if method == "sum":
        return _sum_values(shape, needed, explicit)
    if method == "oracle":
        return _oracle_values(shape, needed)
    if method == "orbit-type":
        return _orbit_type_values(shape, needed)
    raise MethodUnavailableError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


# ==========================================
# 4. Cross-checks
# ==========================================
def _compare(name: str, quantity: str, method: str, expected: int, observed: int) -> CrossCheck:
    passed = expected == observed
    if not passed:
        logger.warning("%s: %s expected %d, %s gave %d", name, quantity, expected, method, observed)
    return CrossCheck(
        name=name, passed=passed, quantity=quantity, method=method, expected=expected, observed=observed
    )


def _sum_applies(shape: GridShape, quantity: str) -> bool:
    if shape.cells > config.CLOSED_SUM_MAX_CELLS or not closed_sums.has_closed_sum(shape, quantity):
        return False
    if quantity == "R" and shape.m % 2 and shape.n % 2:
        return closed_sums.rotation_half_size(shape) <= config.ROTATION_SUM_MAX_HALF
    return True


def _cross_checks(shape: GridShape, values: Dict[str, int], oracle: bool, report: CountReport) -> None:
    checks = report.consistency
    for quantity, value in values.items():
        if _sum_applies(shape, quantity):
            checks.append(_compare(f"{shape} closed sum", quantity, "sum", value, closed_sums.sum_quantity(shape, quantity)))

        exact = orbit_types.count_fixed_by_orbit_types(shape, SUBGROUP_OF[quantity])
        if quantity != "S" or orbit_types.quadrant_size(shape) <= 2:
            checks.append(_compare(f"{shape} orbit-type", quantity, "orbit-type", value, exact))
        elif exact != value:
            report.notes.append(
                f"S on {shape}: the full-symmetry generating function gives {value}, "
                f"the orbit-type count gives {exact} (quadrant of "
                f"{orbit_types.quadrant_size(shape)} cells)"
            )

    if oracle and shape.cells <= config.ORACLE_MAX_CELLS:
        survey = enumeration.survey(shape)
        for quantity, value in values.items():
            ops = SUBGROUP_OF[quantity]
            observed = survey.total if not ops else survey.fixed_by(ops)
            checks.append(_compare(f"{shape} oracle", quantity, "oracle", value, observed))
        if report.w is not None:
            checks.append(_compare(f"{shape} orbit count", "W", "oracle", report.w, survey.orbits))


def _invariant_checks(report: CountReport) -> None:
    p, h, v, r, s, w, c = (report.value(q) for q in QUANTITIES)
    checks = report.consistency
    if None not in (p, h, v, r, s):
        checks.append(CrossCheck(
            name="sandwich S <= min(H,V,R) <= max(H,V,R) <= P",
            passed=s <= min(h, v, r) and max(h, v, r) <= p,
        ))
    if c is not None:
        checks.append(CrossCheck(name="C >= 0", quantity="C", passed=c >= 0, observed=c))
        checks.append(CrossCheck(name="C divisible by 4", quantity="C", passed=c % 4 == 0, observed=c))
    if None not in (h, v, r, s, w, c):
        rebuilt = Fraction(c, 4) + Fraction((h - s) + (v - s) + (r - s), 2) + s
        checks.append(CrossCheck(
            name="W = C/4 + ((H-S)+(V-S)+(R-S))/2 + S",
            quantity="W",
            passed=rebuilt == w,
            expected=w,
        ))


# ==========================================
# 5. Report
# ==========================================
def _requested(shape: GridShape, quantities: Optional[Iterable[str]]) -> Tuple[List[str], List[str]]:
    if quantities is None:
        wanted, explicit = list(QUANTITIES), []
    else:
        wanted = [q.strip().upper() for q in quantities if q.strip()]
        unknown = [q for q in wanted if q not in QUANTITIES]
        if unknown or not wanted:
            raise ValueError(f"unknown quantities {unknown}; choose from {','.join(QUANTITIES)}")
        explicit = list(wanted)
    if shape.is_square:
        if any(q in ("W", "C") for q in explicit):
            _require_rectangular(shape, "/".join(q for q in explicit if q in ("W", "C")))
        wanted = [q for q in wanted if q not in ("W", "C")]
    return wanted, explicit


def count_report(
    shape: GridShape,
    method: str = "auto",
    *,
    quantities: Optional[Iterable[str]] = None,
    oracle: bool = True,
) -> CountReport:
    """Counts for one shape by the given method, with cross-checks and invariants."""
    if method not in METHODS:
        raise MethodUnavailableError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    wanted, explicit = _requested(shape, quantities)

    needed = {q for q in wanted if q in BASE_QUANTITIES}
    if "W" in wanted or "C" in wanted:
        needed |= {"P", "H", "V", "R"}
    if "C" in wanted:
        needed.add("S")
    needed = [q for q in BASE_QUANTITIES if q in needed]

    values = _base_values(shape, method, needed, explicit)
    primary = "egf" if method == "auto" else method
    report = CountReport(shape=shape)
    for quantity, value in values.items():
        setattr(report, quantity.lower(), value)
        report.methods[quantity] = primary

    have_wvr = all(q in values for q in ("P", "H", "V", "R"))
    if "W" in wanted and have_wvr:
        report.w = burnside_quotient(shape, values["P"], values["H"], values["V"], values["R"])
        report.methods["W"] = primary
        if method == "oracle":
            survey = enumeration.survey(shape)
            report.consistency.append(_compare(f"{shape} orbit count", "W", "oracle", report.w, survey.orbits))
    if "C" in wanted and have_wvr and "S" in values:
        report.c = free_orbit_count(values["P"], values["H"], values["V"], values["R"], values["S"])
        report.methods["C"] = primary

    if method == "auto":
        _cross_checks(shape, values, oracle, report)
    _invariant_checks(report)

    # Drop helper quantities that were only computed to derive W or C.
    for quantity in BASE_QUANTITIES:
        if quantity not in wanted:
            setattr(report, quantity.lower(), None)
            report.methods.pop(quantity, None)
    return report
