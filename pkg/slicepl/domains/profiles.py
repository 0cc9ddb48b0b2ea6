"""
Real valued profiles I ↦ p_I on the sphere 𝕊, used for the bisector, opening, line and width of angular and strip
domains.

In spec files a profile is a number (a constant), one of the names in `NAMED_PROFILES`, or a mapping such as
{"type": "harmonic", "base": 1.5708, "amplitude": 0.1, "direction": [0, 0, 1], "power": 2}.
"""
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, Literal

import numpy as np
from pydantic import BaseModel, Extra, Field, validator

from slicepl.models.quaternion import UnitImaginary
from slicepl.utils.registry import Registry


class BaseProfile(BaseModel, ABC):
    type: str

    class Config:
        extra = Extra.forbid
        frozen = True
        arbitrary_types_allowed = True

    @classmethod
    def validate(cls, value: Any) -> "BaseProfile":
        if isinstance(value, cls):
            return value
        if isinstance(value, bool):
            raise TypeError(f"not a profile: {value!r}")
        if isinstance(value, (int, float)):
            return Constant(value=float(value))
        if isinstance(value, str):
            if value not in NAMED_PROFILES:
                known = ", ".join(sorted(NAMED_PROFILES))
                raise ValueError(f"unknown profile {value!r}; expected one of: {known}")
            return NAMED_PROFILES[value]
        if isinstance(value, dict):
            try:
                member = ProfileRegistry.lookup(value.get("type"))
            except KeyError as exc:
                raise ValueError(exc.args[0]) from exc
            return member(**value)
        raise TypeError(f"not a profile: {value!r}")

    @abstractmethod
    def values(self, axes: np.ndarray) -> np.ndarray:
        """ Evaluates the profile at unit vectors of shape (..., 3). """
        ...

    @property
    def constant(self) -> bool:
        return False

    def __call__(self, axis: Any) -> float:
        return float(self.values(UnitImaginary.coerce(axis).vector))

    def to_spec(self) -> Any:
        return self.dict()


ProfileRegistry = Registry(BaseProfile)
profile_type = ProfileRegistry.member


@profile_type()
class Constant(BaseProfile):
    """ p_I = value for every I. """

    type: Literal["constant"] = "constant"
    value: float

    def values(self, axes: np.ndarray) -> np.ndarray:
        return np.full(np.shape(axes)[:-1], self.value)

    @property
    def constant(self) -> bool:
        return True

    def to_spec(self) -> Any:
        return self.value


@profile_type()
class Harmonic(BaseProfile):
    """
    A single harmonic perturbation p_I = base + amplitude·⟨I, direction⟩^power.

    Odd powers give p_{−I} = −p_I (suitable for bisectors), even powers p_{−I} = p_I (suitable for openings and
    widths).
    """

    type: Literal["harmonic"] = "harmonic"
    base: float = 0.0
    amplitude: float
    direction: UnitImaginary
    power: int = Field(1, ge=1)

    @validator("direction", pre=True)
    def _coerce(cls, value: Any) -> UnitImaginary:
        return UnitImaginary.coerce(value)

    def values(self, axes: np.ndarray) -> np.ndarray:
        component = np.tensordot(axes, self.direction.vector, axes=([-1], [0]))
        return self.base + self.amplitude * component ** self.power

    def to_spec(self) -> Any:
        return {
            "type": self.type,
            "base": self.base,
            "amplitude": self.amplitude,
            "direction": list(self.direction.vector),
            "power": self.power,
        }


class CallableProfile(BaseProfile):
    """
    An arbitrary profile given as a vectorised callable from (..., 3) arrays of units to (...) arrays of reals.

    Not available from spec files. Continuity is the caller's responsibility.
    """

    type: Literal["callable"] = "callable"
    func: Callable[[np.ndarray], np.ndarray]

    def values(self, axes: np.ndarray) -> np.ndarray:
        return np.broadcast_to(
            np.asarray(self.func(axes), dtype=float), np.shape(axes)[:-1]
        )

    def to_spec(self) -> Any:
        return {"type": self.type, "func": getattr(self.func, "__name__", repr(self.func))}


NAMED_PROFILES: Dict[str, BaseProfile] = {
    "zero": Constant(value=0.0),
    "half_pi": Constant(value=np.pi / 2),
    "pi": Constant(value=np.pi),
}
