from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field, root_validator

from slicepl.models.quaternion import Quaternion

VIOLATION_COLUMNS = ["point", "modulus", "bound", "slack"]


class PremiseStatus(str, Enum):
    CHECKED_PASS = "checked-pass"
    CHECKED_FAIL = "checked-fail"
    # sampling found no counterexample to a hypothesis over an infinite set
    FALSIFIABLE_ONLY_PASS = "falsifiable-only-pass"
    UNCHECKED = "unchecked"


class ConclusionStatus(str, Enum):
    PASS = "pass"
    VIOLATED = "violated"
    NOT_EVALUATED = "not-evaluated"


class Witness(BaseModel):
    """
    A sample point with ln|f| and the log of the bound it was held to. Grid indices locate it on its shell.
    """

    point: Quaternion
    radius: float
    axis_index: int = -1
    theta_index: int = -1
    log_modulus: float
    log_bound: float

    @property
    def modulus(self) -> float:
        with np.errstate(over="ignore"):
            return float(np.exp(self.log_modulus))

    @property
    def bound(self) -> float:
        with np.errstate(over="ignore"):
            return float(np.exp(self.log_bound))

    @property
    def slack(self) -> float:
        """ ln|f| − ln bound; positive where the bound fails. """
        return self.log_modulus - self.log_bound

    def csv_row(self) -> Dict[str, Any]:
        return {
            "point": self.point.format(),
            "modulus": self.modulus,
            "bound": self.bound,
            "slack": self.slack,
        }

    def render(self) -> str:
        return (
            f"{self.point.format()} |f| = {self.modulus!r} bound = {self.bound!r} "
            f"(r = {self.radius!r}, axis {self.axis_index}, theta {self.theta_index})"
        )


class Premise(BaseModel):
    name: str
    status: PremiseStatus
    evidence: Dict[str, Any] = {}
    witnesses: List[Witness] = []

    @property
    def failed(self) -> bool:
        return self.status == PremiseStatus.CHECKED_FAIL


class VerificationReport(BaseModel):
    """
    Outcome of a theorem check: the premises with their evidence, the conclusion and any witnesses against it.

    When a premise fails the conclusion is not evaluated; the interior is still sampled and points exceeding the
    bound are kept as `diagnostic_witnesses`.
    """

    theorem: str
    premises: List[Premise]
    conclusion: ConclusionStatus
    conclusion_evidence: Dict[str, Any] = {}
    violations: List[Witness] = []
    violation_count: int = 0
    diagnostic_witnesses: List[Witness] = []
    samples: int = 0
    overflow: bool = False
    clipped_at: Optional[float] = None
    parameters: Dict[str, Any] = {}
    config: Dict[str, Any] = {}
    notes: List[str] = Field(default_factory=list)

    @root_validator(skip_on_failure=True)
    def _consistent(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        premises: List[Premise] = values["premises"]
        conclusion: ConclusionStatus = values["conclusion"]
        if any(p.failed for p in premises) and conclusion != ConclusionStatus.NOT_EVALUATED:
            raise ValueError("conclusion must be not-evaluated when a premise is checked-fail")
        if bool(values["violations"]) != (conclusion == ConclusionStatus.VIOLATED):
            raise ValueError("violations must be listed exactly when the conclusion is violated")
        return values

    @property
    def exit_code(self) -> int:
        if self.conclusion == ConclusionStatus.NOT_EVALUATED:
            return 2
        if self.conclusion == ConclusionStatus.VIOLATED:
            return 1
        return 0

    def premise(self, name: str) -> Premise:
        for premise in self.premises:
            if premise.name == name:
                return premise
        raise KeyError(name)

    def violation_rows(self) -> List[Dict[str, Any]]:
        return [w.csv_row() for w in self.violations]

    def render(self) -> str:
        lines = [f"theorem: {self.theorem}"]
        for key, value in self.parameters.items():
            lines.append(f"parameter {key}: {_format(value)}")
        for premise in self.premises:
            lines.append(f"premise {premise.name}: {premise.status.value}")
            for key, value in premise.evidence.items():
                lines.append(f"  {key}: {_format(value)}")
            for witness in premise.witnesses:
                lines.append(f"  witness {witness.render()}")
        lines.append(f"conclusion: {self.conclusion.value}")
        for key, value in self.conclusion_evidence.items():
            lines.append(f"  {key}: {_format(value)}")
        lines.append(f"samples: {self.samples}")
        if self.violations:
            lines.append(f"violations: {self.violation_count}")
            for witness in self.violations:
                lines.append(f"  {witness.render()}")
        if self.diagnostic_witnesses:
            lines.append("diagnostic witnesses:")
            for witness in self.diagnostic_witnesses:
                lines.append(f"  {witness.render()}")
        if self.overflow:
            lines.append("overflow: |f| exceeded the float range")
        if self.clipped_at is not None:
            lines.append(f"clipped at: {self.clipped_at!r}")
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append("config:")
        for key in sorted(self.config):
            lines.append(f"  {key}: {_format(self.config[key])}")
        return "\n".join(lines)


def _format(value: Any) -> str:
    if isinstance(value, float):
        return repr(float(value))
    if isinstance(value, Quaternion):
        return value.format()
    return str(value)
