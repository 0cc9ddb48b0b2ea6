from typing import Any, Dict, Literal

import numpy as np
from pydantic import Field, validator

from slicepl import kernels
from slicepl.errors import COMPOSITION_PROPOSITION, PropositionError
from slicepl.models.function import BaseFunction, function_node
from slicepl.models.quaternion import Quaternion

from .primitives import Identity


def require_slice_preserving(
    node: BaseFunction, proposition: str, role: str
) -> BaseFunction:
    if not node.slice_preserving:
        raise PropositionError(
            f"{role} {node} is not structurally slice preserving", proposition
        )
    return node


class UnaryFunction(BaseFunction):
    """
    A node applied to the value of a single argument node, by default the identity.
    """

    arg: BaseFunction = Field(default_factory=Identity)

    @property
    def children(self):
        return [self.arg]

    def structurally_slice_preserving(self) -> bool:
        return self.arg.slice_preserving

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "arg": self.arg.to_spec()}


@function_node()
class Exp(UnaryFunction):
    """
    e^{f(q)}; f must be slice preserving for the result to be slice regular.
    """

    type: Literal["exp"] = "exp"

    @validator("arg")
    def _arg_slice_preserving(cls, arg: BaseFunction) -> BaseFunction:
        return require_slice_preserving(arg, COMPOSITION_PROPOSITION, "exponent")

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qexp(self.arg.evaluate(q))

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        # |e^p| = e^{Re p}
        return self.arg.evaluate(q)[..., 0]


@function_node()
class Pow(UnaryFunction):
    """
    f(q)^γ = e^{γ Log f(q)}, undefined where f(q) ∈ (−∞, 0].
    """

    type: Literal["pow"] = "pow"
    gamma: float

    @validator("arg")
    def _arg_slice_preserving(cls, arg: BaseFunction) -> BaseFunction:
        return require_slice_preserving(arg, COMPOSITION_PROPOSITION, "base")

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qpow(self.arg.evaluate(q), self.gamma)

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        base = self.arg.evaluate(q)
        out = self.gamma * kernels.log_abs(base)
        return np.where(kernels.principal_log_mask(base), out, np.nan)

    def structurally_entire(self) -> bool:
        return False

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "gamma": self.gamma, "arg": self.arg.to_spec()}


@function_node()
class Negate(UnaryFunction):
    """ −f(q). """

    type: Literal["negate"] = "negate"

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return -self.arg.evaluate(q)

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        return self.arg.log_modulus(q)


@function_node()
class ShiftByReal(UnaryFunction):
    """ f(q) + t for a real t. """

    type: Literal["shift"] = "shift"
    t: float

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return self.arg.evaluate(q) + kernels.real(self.t)

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "t": self.t, "arg": self.arg.to_spec()}


@function_node()
class RightScale(UnaryFunction):
    """ f(q)·c; slice preserving when f is and c is real. """

    type: Literal["right_scale"] = "right_scale"
    c: Quaternion

    @validator("c", pre=True)
    def _coerce(cls, value: Any) -> Quaternion:
        return Quaternion.coerce(value)

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qmul(self.arg.evaluate(q), self.c.array)

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return self.arg.log_modulus(q) + np.log(self.c.modulus())

    def structurally_slice_preserving(self) -> bool:
        return self.arg.slice_preserving and self.c.is_real

    def to_spec(self) -> Dict[str, Any]:
        return {
            "type": self.type,
            "c": list(self.c.components()),
            "arg": self.arg.to_spec(),
        }
