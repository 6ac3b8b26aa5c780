#!/usr/bin/env python3

"""
verification.py

The verification suite behind `wordrep verify`: every computation path is
compared against the others, the centre-cell constants are re-derived, and the
published reference counts are reproduced.

Checks (in run order):
1. stirling recurrence           {n,t} = t{n-1,t} + {n-1,t-1}
2. p_count identities            binomial/Stirling sum vs series; p_0 = Stirling; p_c = c^(N-c)
3. circled total vs oracle       sum over c, j of C(N,j) p_j(N,c) vs brute force
4. closed sums vs EGF            every closed summation on its applicable shapes
5. EGF vs oracle                 P, H, V, R, S against enumeration (m*n <= --max-cells)
6. naive fixed points            orbit-product fixed counts vs explicit circle enumeration
7. Burnside orbit count          4 * orbits = P + H + V + R, orbits = W
8. Burnside integrality          4 divides P + H + V + R (m != n)
9. transpose and sandwich        P, S, R transpose-invariant, H(m,n) = V(n,m),
                                 S <= min(H,V,R), max(H,V,R) <= P, single-row identities
10. rotation centre factor       K re-derived against oracle, closed sum and reference counts
11. full-symmetry centre factor  K' re-derived against oracle and reference counts
12. reference counts             every published value; each erratum is re-derived by
                                 EGF, closed sum, orbit type and oracle
13. orbit-type vs EGF / oracle   the stabilizer-class generating function
14. full-symmetry scope          advisory: where the published S generating functions
                                 and the orbit-type count part ways

A check that raises a WordRepError is reported as failed with the error text.
Advisory checks never change the exit status.

Configuration:
- Sweep bounds come from `wordrep.config` (CLOSED_SUM_MAX_CELLS,
  ROTATION_SUM_MAX_HALF, IDENTITY_MAX_CELLS, INTEGRALITY_MAX_CELLS,
  PROPERTY_MAX_CELLS, ORBIT_TYPE_AUDIT_MAX_CELLS, NAIVE_MAX_CELLS).

Dependencies:
- pydantic
- tqdm
- wordrep.algebra / counting / oracle / utils
"""

from __future__ import annotations

import functools
import logging
from typing import Callable, List, Optional

from pydantic import BaseModel
from tqdm import tqdm

from wordrep import config
from wordrep.algebra import exact_math
from wordrep.counting import closed_sums, egf_counts, orbit_types
from wordrep.counting.models import GridShape, shapes_up_to
from wordrep.exceptions import OracleLimitError, WordRepError
from wordrep.oracle import enumeration
from wordrep.oracle.enumeration import SymmetryOp
from wordrep.utils.data_loader import load_reference_counts, load_reference_errata

logger = logging.getLogger(__name__)


class CheckOutcome(BaseModel):
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: Optional[str] = None
    advisory: bool = False
    detail: str = ""

    def record(self, ok: bool, case: str) -> bool:
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = case
        return ok

    def expect(self, label: str, expected: int, observed: int) -> bool:
        return self.record(expected == observed, f"{label}: expected {expected}, got {observed}")


CHECKS: List[Callable[[int], CheckOutcome]] = []


def verification_check(name: str, advisory: bool = False):
    """Register a check; it fills in a fresh CheckOutcome and may raise WordRepError."""

    def register(func: Callable[[CheckOutcome, int], None]) -> Callable[[int], CheckOutcome]:
        @functools.wraps(func)
        def run(max_cells: int) -> CheckOutcome:
            outcome = CheckOutcome(name=name, advisory=advisory)
            try:
                func(outcome, max_cells)
            except WordRepError as e:
                logger.error("Check %s raised: %s", name, e)
                outcome.passed = False
                outcome.counterexample = f"{type(e).__name__}: {e}"
            return outcome

        CHECKS.append(run)
        return run

    return register


def _oracle_value(shape: GridShape, quantity: str) -> int:
    survey = enumeration.survey(shape)
    ops = egf_counts.SUBGROUP_OF[quantity]
    return survey.total if not ops else survey.fixed_by(ops)


# ==========================================
# 1-3. Exact-math identities
# ==========================================
@verification_check("stirling recurrence")
def check_stirling_recurrence(outcome: CheckOutcome, max_cells: int) -> None:
    stirling2 = exact_math.stirling2
    for n in range(1, config.INTEGRALITY_MAX_CELLS + 1):
        for t in range(1, n + 1):
            outcome.expect(
                f"{{{n},{t}}}", t * stirling2(n - 1, t) + stirling2(n - 1, t - 1), stirling2(n, t)
            )


@verification_check("p_count identities")
def check_p_count_identities(outcome: CheckOutcome, max_cells: int) -> None:
    for N in range(0, config.IDENTITY_MAX_CELLS + 1):
        for c in range(0, N + 1):
            outcome.expect(f"p_0({N},{c})", exact_math.stirling2(N, c), exact_math.p_count(0, N, c))
            outcome.expect(f"p_{c}({N},{c})", c ** (N - c), exact_math.p_count(c, N, c))
            for j in range(0, c + 1):
                outcome.expect(
                    f"p_{j}({N},{c})", exact_math.p_count(j, N, c), exact_math.p_count_sum(j, N, c)
                )


@verification_check("circled total vs oracle")
def check_circled_total(outcome: CheckOutcome, max_cells: int) -> None:
    limit = min(config.IDENTITY_MAX_CELLS, max_cells, config.ORACLE_MAX_CELLS)
    for N in range(1, limit + 1):
        brute = enumeration.count_all(GridShape(m=1, n=N))
        outcome.expect(f"N={N} closed sum", brute, exact_math.circled_total(N, closed_sum=True))
        outcome.expect(f"N={N} series", brute, exact_math.circled_total(N))


# ==========================================
# 4-5. Closed sums and oracle against the EGF
# ==========================================
@verification_check("closed sums vs EGF")
def check_closed_sums(outcome: CheckOutcome, max_cells: int) -> None:
    for shape in shapes_up_to(config.CLOSED_SUM_MAX_CELLS):
        outcome.expect(f"{shape} sum_p", egf_counts.count_p(shape), closed_sums.sum_p(shape))
        if shape.m % 2 == 0:
            outcome.expect(f"{shape} sum_h_even", egf_counts.count_h(shape), closed_sums.sum_h_even(shape))
        else:
            outcome.expect(f"{shape} sum_h_odd", egf_counts.count_h(shape), closed_sums.sum_h_odd(shape))
        if shape.m % 2 and shape.n % 2:
            if closed_sums.rotation_half_size(shape) <= config.ROTATION_SUM_MAX_HALF:
                outcome.expect(
                    f"{shape} sum_r_oddodd", egf_counts.count_r(shape), closed_sums.sum_r_oddodd(shape)
                )
        if shape.m % 2 == 0 and shape.n % 2 == 0:
            outcome.expect(
                f"{shape} sum_s_eveneven", egf_counts.count_s(shape), closed_sums.sum_s_eveneven(shape)
            )


@verification_check("EGF vs oracle")
def check_egf_vs_oracle(outcome: CheckOutcome, max_cells: int) -> None:
    for shape in shapes_up_to(max_cells):
        for quantity, counter in egf_counts.EGF_COUNTERS.items():
            outcome.expect(f"{shape} {quantity}", _oracle_value(shape, quantity), counter(shape))


@verification_check("naive fixed points")
def check_naive_fixed_points(outcome: CheckOutcome, max_cells: int) -> None:
    for shape in shapes_up_to(min(max_cells, config.NAIVE_MAX_CELLS)):
        for group in enumeration.SUBGROUPS:
            ops = [op for op in group if op is not SymmetryOp.IDENTITY]
            label = "+".join(sorted(op.value for op in ops))
            outcome.expect(
                f"{shape} {label}",
                enumeration.count_fixed(shape, ops),
                enumeration.count_fixed_naive(shape, ops),
            )


# ==========================================
# 7-9. Burnside and structural properties
# ==========================================
@verification_check("Burnside orbit count")
def check_burnside_orbits(outcome: CheckOutcome, max_cells: int) -> None:
    for shape in shapes_up_to(max_cells, rectangular=True):
        survey = enumeration.survey(shape)
        fixed = sum(survey.fixed_by([op]) for op in enumeration.NON_IDENTITY)
        outcome.expect(f"{shape} 4*orbits", survey.total + fixed, 4 * survey.orbits)
        outcome.expect(f"{shape} W", egf_counts.count_w(shape), survey.orbits)


@verification_check("Burnside integrality")
def check_burnside_integrality(outcome: CheckOutcome, max_cells: int) -> None:
    for shape in shapes_up_to(config.INTEGRALITY_MAX_CELLS, rectangular=True):
        total = sum(egf_counts.EGF_COUNTERS[q](shape) for q in ("P", "H", "V", "R"))
        outcome.record(total % 4 == 0, f"{shape}: P+H+V+R = {total}")


@verification_check("transpose and sandwich")
def check_properties(outcome: CheckOutcome, max_cells: int) -> None:
    p, h, v, r, s = (egf_counts.EGF_COUNTERS[q] for q in ("P", "H", "V", "R", "S"))
    for shape in shapes_up_to(config.PROPERTY_MAX_CELLS):
        flipped = shape.transpose()
        outcome.expect(f"{shape} P transpose", p(shape), p(flipped))
        outcome.expect(f"{shape} S transpose", s(shape), s(flipped))
        outcome.expect(f"{shape} R transpose", r(shape), r(flipped))
        outcome.expect(f"{shape} H vs V of transpose", h(shape), v(flipped))
        values = [h(shape), v(shape), r(shape)]
        outcome.record(
            s(shape) <= min(values) and max(values) <= p(shape),
            f"{shape}: S={s(shape)} H,V,R={values} P={p(shape)}",
        )
        if shape.m == 1:
            outcome.expect(f"{shape} H single row", p(shape), h(shape))
        if shape.n == 1:
            outcome.expect(f"{shape} V single column", p(shape), v(shape))


# ==========================================
# 10-12. Centre-cell constants and reference counts
# ==========================================
def _audit_center_factor(
    outcome: CheckOutcome,
    quantity: str,
    factor: int,
    counter: Callable[..., int],
    oracle_shapes: List[GridShape],
    max_cells: int,
) -> None:
    small = [GridShape(m=3, n=1), GridShape(m=1, n=1)]
    for shape in small:
        scaled = counter(shape, center_factor=factor)
        literal = counter(shape, center_factor=1)
        outcome.expect(f"{shape} {quantity} oracle", _oracle_value(shape, quantity), scaled)
        outcome.record(literal != scaled, f"{shape}: unscaled {quantity} {literal} equals the scaled value")
    for shape in oracle_shapes:
        if shape.cells <= min(max_cells, config.ORACLE_MAX_CELLS):
            outcome.expect(
                f"{shape} {quantity} oracle", _oracle_value(shape, quantity), counter(shape, center_factor=factor)
            )
    anchor = GridShape(m=3, n=5)
    published = load_reference_counts()[(anchor.m, anchor.n)][quantity]
    outcome.expect(f"{anchor} {quantity} reference", published, counter(anchor, center_factor=factor))


@verification_check("rotation centre factor")
def check_rotation_factor(outcome: CheckOutcome, max_cells: int) -> None:
    factor = config.ROTATION_CENTER_FACTOR
    _audit_center_factor(outcome, "R", factor, egf_counts.count_r, [GridShape(m=3, n=3)], max_cells)
    for shape in (GridShape(m=3, n=1), GridShape(m=1, n=1), GridShape(m=3, n=3)):
        outcome.expect(
            f"{shape} sum_r_oddodd", closed_sums.sum_r_oddodd(shape), egf_counts.count_r(shape, center_factor=factor)
        )
    if outcome.passed:
        outcome.detail = f"K={factor} confirmed at (3,1),(3,5)"


@verification_check("full-symmetry centre factor")
def check_full_symmetry_factor(outcome: CheckOutcome, max_cells: int) -> None:
    factor = config.FULL_SYMMETRY_CENTER_FACTOR
    _audit_center_factor(outcome, "S", factor, egf_counts.count_s, [GridShape(m=3, n=3)], max_cells)
    if outcome.passed:
        checked = "(3,1),(3,3),(3,5)" if max_cells >= 9 else "(3,1),(3,5)"
        outcome.detail = f"K'={factor} confirmed at {checked}"


@verification_check("reference counts")
def check_reference_counts(outcome: CheckOutcome, max_cells: int) -> None:
    counts = load_reference_counts()
    for (m, n), published in counts.items():
        shape = GridShape(m=m, n=n)
        for quantity, value in published.items():
            if quantity == "W":
                observed = egf_counts.count_w(shape)
            else:
                observed = egf_counts.EGF_COUNTERS[quantity](shape)
            outcome.expect(f"{shape} {quantity}", value, observed)

    corrected = []
    for erratum in load_reference_errata():
        shape = GridShape(m=erratum.m, n=erratum.n)
        label = f"{shape} {erratum.quantity} erratum"
        golden = counts.get((erratum.m, erratum.n), {}).get(erratum.quantity)
        outcome.expect(f"{label} golden row", erratum.corrected, golden)
        outcome.record(
            erratum.published != erratum.corrected,
            f"{label}: published {erratum.published} equals the correction",
        )
        paths = ["egf"]
        outcome.expect(f"{label} egf", erratum.corrected, egf_counts.EGF_COUNTERS[erratum.quantity](shape))
        if closed_sums.has_closed_sum(shape, erratum.quantity):
            outcome.expect(f"{label} sum", erratum.corrected, closed_sums.sum_quantity(shape, erratum.quantity))
            paths.append("sum")
        exact = orbit_types.count_fixed_by_orbit_types(shape, egf_counts.SUBGROUP_OF[erratum.quantity])
        outcome.expect(f"{label} orbit-type", erratum.corrected, exact)
        paths.append("orbit-type")
        if shape.cells <= min(max_cells, config.ORACLE_MAX_CELLS):
            outcome.expect(f"{label} oracle", erratum.corrected, _oracle_value(shape, erratum.quantity))
            paths.append("oracle")
        corrected.append(
            f"{shape} {erratum.quantity} {erratum.published}->{erratum.corrected} ({'+'.join(paths)})"
        )
    if outcome.passed and corrected:
        outcome.detail = "corrected " + "; ".join(corrected)


# ==========================================
# 13-14. Orbit-type path
# ==========================================
@verification_check("orbit-type vs EGF and oracle")
def check_orbit_types(outcome: CheckOutcome, max_cells: int) -> None:
    for shape in shapes_up_to(config.ORBIT_TYPE_AUDIT_MAX_CELLS):
        for quantity, counter in egf_counts.EGF_COUNTERS.items():
            if quantity == "S" and orbit_types.quadrant_size(shape) > 2:
                continue
            exact = orbit_types.count_fixed_by_orbit_types(shape, egf_counts.SUBGROUP_OF[quantity])
            outcome.expect(f"{shape} {quantity}", counter(shape), exact)
    for shape in shapes_up_to(max_cells):
        for quantity in egf_counts.EGF_COUNTERS:
            exact = orbit_types.count_fixed_by_orbit_types(shape, egf_counts.SUBGROUP_OF[quantity])
            outcome.expect(f"{shape} {quantity} oracle", _oracle_value(shape, quantity), exact)


@verification_check("full-symmetry scope", advisory=True)
def check_full_symmetry_scope(outcome: CheckOutcome, max_cells: int) -> None:
    findings = []
    for shape in shapes_up_to(config.ORBIT_TYPE_AUDIT_MAX_CELLS):
        if shape.m > shape.n:
            continue
        published = egf_counts.count_s(shape)
        exact = orbit_types.count_fixed_by_orbit_types(shape, egf_counts.SUBGROUP_OF["S"])
        if not outcome.expect(f"{shape} S", exact, published):
            findings.append(f"{shape}: {published} vs {exact}")
    if findings:
        outcome.detail = (
            "S generating functions differ from the orbit-type count once the quadrant "
            "exceeds two cells: " + "; ".join(findings)
        )


def run_verification(max_cells: Optional[int] = None) -> List[CheckOutcome]:
    """Run every check; a WordRepError inside a check fails that check only."""
    max_cells = config.VERIFY_MAX_CELLS if max_cells is None else max_cells
    if max_cells > config.ORACLE_MAX_CELLS:
        raise OracleLimitError(
            f"--max-cells {max_cells} exceeds the oracle limit of {config.ORACLE_MAX_CELLS} cells "
            "(set WORDREP_ORACLE_MAX_CELLS to raise it)"
        )
    outcomes = []
    for check in tqdm(CHECKS, desc="Verifying", leave=False, disable=None):
        outcome = check(max_cells)
        if outcome.passed:
            level, status = logging.INFO, "pass"
        elif outcome.advisory:
            level, status = logging.INFO, "note"
        else:
            level, status = logging.ERROR, "FAIL"
        logger.log(level, "%s: %s (%d cases)", outcome.name, status, outcome.cases)
        outcomes.append(outcome)
    return outcomes


def verification_passed(outcomes: List[CheckOutcome]) -> bool:
    return all(o.passed for o in outcomes if not o.advisory)


def render_matrix(outcomes: List[CheckOutcome]) -> str:
    lines = []
    for outcome in outcomes:
        if outcome.passed:
            status = "PASS"
        else:
            status = "NOTE" if outcome.advisory else "FAIL"
        line = f"{status:<5}{outcome.name:<32}{outcome.cases:>7} cases"
        if outcome.detail:
            line += f"  {outcome.detail}"
        if not outcome.passed and not outcome.advisory:
            line += f"  first counterexample: {outcome.counterexample}"
        lines.append(line)
    return "\n".join(lines) + "\n"
