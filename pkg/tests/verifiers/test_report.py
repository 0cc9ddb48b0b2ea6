import numpy as np
import pytest
from pydantic import ValidationError

from slicepl.models.quaternion import Quaternion
from slicepl.verifiers import ConclusionStatus, Premise, PremiseStatus, VerificationReport, Witness
from slicepl.verifiers.report import VIOLATION_COLUMNS


def _witness(log_modulus: float = 2.0, log_bound: float = 0.0) -> Witness:
    return Witness(
        point=Quaternion(w=2.0, x=1.0),
        radius=np.sqrt(5.0),
        axis_index=0,
        theta_index=3,
        log_modulus=log_modulus,
        log_bound=log_bound,
    )


def _premise(status: PremiseStatus) -> Premise:
    return Premise(name="order", status=status, evidence={"order_est": 1.0})


def test_witness_values() -> None:
    witness = _witness()
    assert witness.modulus == pytest.approx(np.e ** 2)
    assert witness.bound == 1.0
    assert witness.slack == 2.0
    assert list(witness.csv_row()) == VIOLATION_COLUMNS
    assert "axis 0, theta 3" in witness.render()


def test_witness_should_survive_overflow() -> None:
    assert _witness(log_modulus=1e4).modulus == np.inf


@pytest.mark.parametrize(
    "conclusion, violations, expected",
    [
        (ConclusionStatus.PASS, [], 0),
        (ConclusionStatus.VIOLATED, [_witness()], 1),
        (ConclusionStatus.NOT_EVALUATED, [], 2),
    ],
)
def test_exit_codes(conclusion: ConclusionStatus, violations, expected: int) -> None:
    report = VerificationReport(
        theorem="cone",
        premises=[_premise(PremiseStatus.FALSIFIABLE_ONLY_PASS)],
        conclusion=conclusion,
        violations=violations,
        violation_count=len(violations),
    )
    assert report.exit_code == expected


def test_failed_premise_should_leave_conclusion_unevaluated() -> None:
    with pytest.raises(ValidationError):
        VerificationReport(theorem="cone", premises=[_premise(PremiseStatus.CHECKED_FAIL)], conclusion="pass")


@pytest.mark.parametrize(
    "conclusion, violations",
    [(ConclusionStatus.PASS, [_witness()]), (ConclusionStatus.VIOLATED, [])],
)
def test_violations_should_match_conclusion(conclusion: ConclusionStatus, violations) -> None:
    with pytest.raises(ValidationError):
        VerificationReport(theorem="cone", premises=[], conclusion=conclusion, violations=violations)


def test_premise_lookup() -> None:
    report = VerificationReport(
        theorem="cone", premises=[_premise(PremiseStatus.UNCHECKED)], conclusion=ConclusionStatus.PASS
    )
    assert report.premise("order").status == PremiseStatus.UNCHECKED
    with pytest.raises(KeyError):
        report.premise("type")


def test_render() -> None:
    report = VerificationReport(
        theorem="cone",
        premises=[_premise(PremiseStatus.FALSIFIABLE_ONLY_PASS)],
        conclusion=ConclusionStatus.VIOLATED,
        violations=[_witness()],
        violation_count=7,
        samples=100,
        clipped_at=354.0,
        parameters={"alpha": 2.0},
        config={"n_theta": 21, "conclusion_tol": 1e-9},
        notes=["a note"],
    )
    lines = report.render().splitlines()
    assert lines[0] == "theorem: cone"
    assert "parameter alpha: 2.0" in lines
    assert "premise order: falsifiable-only-pass" in lines
    assert "conclusion: violated" in lines
    assert "violations: 7" in lines
    assert "clipped at: 354.0" in lines
    assert "note: a note" in lines
    assert lines[-2:] == ["  conclusion_tol: 1e-09", "  n_theta: 21"], "config keys should be sorted"
    assert report.violation_rows() == [_witness().csv_row()]
