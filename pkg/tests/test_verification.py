import logging
from unittest.mock import patch

import pytest

from wordrep import config
from wordrep.pipeline import verification
from wordrep.pipeline.verification import (
    check_full_symmetry_scope,
    check_reference_counts,
    render_matrix,
    run_verification,
    verification_passed,
)


# -----------------------------
# 1. Reference counts and errata
# -----------------------------
def test_reference_counts_confirm_the_2x5_correction():
    outcome = check_reference_counts(4)
    assert outcome.passed, outcome.counterexample
    assert "2x5 H 770->7770 (egf+sum+orbit-type)" in outcome.detail
    assert "2x5 R 770->7770" in outcome.detail


@pytest.mark.slow
def test_reference_counts_use_the_oracle_within_the_limit():
    outcome = check_reference_counts(10)
    assert outcome.passed, outcome.counterexample
    assert "2x5 H 770->7770 (egf+sum+orbit-type+oracle)" in outcome.detail


def test_reference_counts_reject_a_wrong_correction(tmp_path, monkeypatch):
    path = tmp_path / "errata.csv"
    path.write_text("m,n,quantity,published,corrected\n2,5,H,7770,770\n")
    monkeypatch.setattr(config, "REFERENCE_ERRATA_FILE", str(path))
    outcome = check_reference_counts(4)
    assert not outcome.passed
    assert outcome.counterexample.startswith("2x5 H erratum")
    assert outcome.detail == ""


def test_reference_counts_reject_the_published_typo(tmp_path, monkeypatch):
    path = tmp_path / "counts.csv"
    path.write_text("m,n,P,H,V,R,S,W\n2,5,22277080,770,12976,770,234,\n")
    monkeypatch.setattr(config, "REFERENCE_COUNTS_FILE", str(path))
    outcome = check_reference_counts(4)
    assert not outcome.passed
    assert outcome.counterexample == "2x5 H: expected 770, got 7770"


# -----------------------------
# 2. Advisory outcomes
# -----------------------------
def test_advisory_outcome_is_logged_as_a_note(monkeypatch, caplog):
    monkeypatch.setattr(config, "ORBIT_TYPE_AUDIT_MAX_CELLS", 12)
    with patch.object(verification, "CHECKS", [check_full_symmetry_scope]):
        with caplog.at_level(logging.INFO, logger=verification.__name__):
            outcomes = run_verification(4)
    assert not outcomes[0].passed
    assert "2x6: 611 vs 635" in outcomes[0].detail
    assert "full-symmetry scope: note" in caplog.text
    assert "FAIL" not in caplog.text
    assert verification_passed(outcomes)
    assert render_matrix(outcomes).startswith("NOTE ")


# -----------------------------
# 3. Full run at the default bounds
# -----------------------------
@pytest.mark.slow
def test_full_verification_passes_at_default_bounds():
    outcomes = run_verification(10)
    failed = [(o.name, o.counterexample) for o in outcomes if not o.passed and not o.advisory]
    assert failed == []
    assert verification_passed(outcomes)
    reference = next(o for o in outcomes if o.name == "reference counts")
    assert "2x5 H 770->7770 (egf+sum+orbit-type+oracle)" in reference.detail
