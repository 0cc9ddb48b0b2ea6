from typing import Any, Dict, Literal

import numpy as np
from pydantic import validator

from slicepl import kernels
from slicepl.models.function import BaseFunction, function_node
from slicepl.models.quaternion import Quaternion


def _broadcast(value: np.ndarray, q: np.ndarray) -> np.ndarray:
    return np.broadcast_to(value, np.shape(q)).copy()


@function_node()
class Identity(BaseFunction):
    """ f(q) = q. """

    type: Literal["identity"] = "identity"

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return np.array(q, dtype=float)

    def structurally_slice_preserving(self) -> bool:
        return True


@function_node()
class RealConstant(BaseFunction):
    """ f(q) = t for a real t. """

    type: Literal["real_constant"] = "real_constant"
    t: float

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return _broadcast(kernels.real(self.t), q)

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.full(np.shape(q)[:-1], np.log(abs(self.t)))

    def structurally_slice_preserving(self) -> bool:
        return True

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "t": self.t}


@function_node()
class QuatConstant(BaseFunction):
    """ f(q) = c; slice preserving only when c is real. """

    type: Literal["constant"] = "constant"
    c: Quaternion

    @validator("c", pre=True)
    def _coerce(cls, value: Any) -> Quaternion:
        return Quaternion.coerce(value)

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return _broadcast(self.c.array, q)

    def structurally_slice_preserving(self) -> bool:
        return self.c.is_real

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "c": list(self.c.components())}


@function_node()
class PrincipalLog(BaseFunction):
    """
    Log q = ln|q| + arccos(Re q/|q|)·Im q/|Im q| on ℍ ∖ (−∞, 0].
    """

    type: Literal["log"] = "log"

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qlog(q)

    def structurally_slice_preserving(self) -> bool:
        return True

    def structurally_entire(self) -> bool:
        return False


@function_node()
class BranchLog(BaseFunction):
    """
    log q = ln|q| + [arccos(Re q/|q|) − π]·Im q/|Im q| on ℍ ∖ [0, +∞), equal to ln|q| on the negative reals.
    """

    type: Literal["branch_log"] = "branch_log"

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qlog_branch(q)

    def structurally_slice_preserving(self) -> bool:
        return True

    def structurally_entire(self) -> bool:
        return False


@function_node()
class Inverse(BaseFunction):
    """ f(q) = q⁻¹ on ℍ ∖ {0}. """

    type: Literal["inverse"] = "inverse"

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qinv(q)

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        out = -kernels.log_abs(q)
        out[np.isinf(out)] = np.nan
        return out

    def structurally_slice_preserving(self) -> bool:
        return True

    def structurally_entire(self) -> bool:
        return False
