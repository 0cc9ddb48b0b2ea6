from typing import Any, Dict, List, Literal, Optional

import numpy as np
from pydantic import Field, validator

from slicepl import kernels
from slicepl.models.function import BaseFunction, function_node
from slicepl.models.quaternion import Quaternion


@function_node()
class PowerSeries(BaseFunction):
    """
    f(q) = Σ q^n a_n for n = 0..N, coefficients multiplied on the right.

    A series standing for a longer convergent one may declare `tail_ratio`, a bound ρ with
    |a_n| ≤ |a_N| ρ^(n−N) for n > N, which enables `truncation_error`.
    """

    type: Literal["power_series"] = "power_series"
    coeffs: List[Quaternion] = Field(..., min_items=1, description="a_0, ..., a_N")
    tail_ratio: Optional[float] = Field(
        None, gt=0, description="Declared geometric decay of the omitted coefficients."
    )

    @validator("coeffs", pre=True)
    def _coerce(cls, value: Any) -> List[Quaternion]:
        return [Quaternion.coerce(c) for c in value]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_array(self) -> np.ndarray:
        return np.array([c.array for c in self.coeffs])

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        coeffs = self.coefficient_array()
        acc = np.broadcast_to(coeffs[-1], np.shape(q)).copy()
        for a in coeffs[-2::-1]:
            acc = kernels.qmul(q, acc) + a
        return acc

    def truncation_error(self, q: np.ndarray) -> np.ndarray:
        """
        Bound on the omitted tail |Σ_{n>N} q^n a_n|; zero for an exact polynomial, inf where ρ|q| ≥ 1.
        """
        r = kernels.qabs(q)
        if self.tail_ratio is None:
            return np.zeros_like(r)
        last = self.coeffs[-1].modulus()
        x = self.tail_ratio * r
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            bound = last * r ** self.degree * x / (1 - x)
        return np.where(x < 1, bound, np.inf)

    def structurally_slice_preserving(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def structurally_truncated(self) -> bool:
        return self.tail_ratio is not None

    def to_spec(self) -> Dict[str, Any]:
        spec: Dict[str, Any] = {
            "type": self.type,
            "coeffs": [list(c.components()) for c in self.coeffs],
        }
        if self.tail_ratio is not None:
            spec["tail_ratio"] = self.tail_ratio
        return spec
