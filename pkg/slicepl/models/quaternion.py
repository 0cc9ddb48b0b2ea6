from typing import Any, Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Extra, Field, validator

from slicepl import kernels

UNIT_TOLERANCE = 1e-12

QuaternionLike = Union["Quaternion", Sequence[float], str, float, int, dict]


class Quaternion(BaseModel):
    """
    An element w + xi + yj + zk of the quaternions.
    """

    w: float = Field(0.0, description="Real part.")
    x: float = Field(0.0, description="Coefficient of i.")
    y: float = Field(0.0, description="Coefficient of j.")
    z: float = Field(0.0, description="Coefficient of k.")

    class Config:
        extra = Extra.forbid
        frozen = True

    @classmethod
    def from_array(cls, arr: Iterable[float]) -> "Quaternion":
        w, x, y, z = (float(v) for v in arr)
        return cls(w=w, x=x, y=y, z=z)

    @classmethod
    def from_string(cls, value: str) -> "Quaternion":
        """
        Parses the command line form "w,x,y,z".
        """
        parts = [part.strip() for part in value.strip().strip("[]").split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated components: {value!r}")
        return cls.from_array(float(part) for part in parts)

    @classmethod
    def real(cls, t: float) -> "Quaternion":
        return cls(w=float(t))

    @classmethod
    def coerce(cls, value: QuaternionLike) -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, str):
            return cls.from_string(value)
        if isinstance(value, (int, float)):
            return cls.real(value)
        if isinstance(value, dict):
            return cls(**value)
        return cls.from_array(value)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def components(self) -> Tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    @property
    def re(self) -> float:
        return self.w

    @property
    def im(self) -> "Quaternion":
        return Quaternion(x=self.x, y=self.y, z=self.z)

    @property
    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def conjugate(self) -> "Quaternion":
        return Quaternion(w=self.w, x=-self.x, y=-self.y, z=-self.z)

    def modulus(self) -> float:
        return float(kernels.qabs(self.array))

    def __add__(self, other: QuaternionLike) -> "Quaternion":
        return Quaternion.from_array(self.array + Quaternion.coerce(other).array)

    def __radd__(self, other: QuaternionLike) -> "Quaternion":
        return self.__add__(other)

    def __sub__(self, other: QuaternionLike) -> "Quaternion":
        return Quaternion.from_array(self.array - Quaternion.coerce(other).array)

    def __neg__(self) -> "Quaternion":
        return Quaternion.from_array(-self.array)

    def __mul__(self, other: QuaternionLike) -> "Quaternion":
        return Quaternion.from_array(kernels.qmul(self.array, Quaternion.coerce(other).array))

    def __rmul__(self, other: QuaternionLike) -> "Quaternion":
        return Quaternion.from_array(kernels.qmul(Quaternion.coerce(other).array, self.array))

    def __abs__(self) -> float:
        return self.modulus()

    def format(self, digits: int = 17) -> str:
        return "[" + ", ".join(format(v, f".{digits}g") for v in self.components()) + "]"

    def __str__(self) -> str:
        return self.format()


class UnitImaginary(BaseModel):
    """
    A unit purely imaginary quaternion I, so that I² = −1; labels the slice L_I = ℝ + ℝI.
    """

    x: float
    y: float
    z: float

    class Config:
        extra = Extra.forbid
        frozen = True

    @validator("z")
    def _unit_length(cls, z: float, values: dict) -> float:
        if "x" not in values or "y" not in values:
            return z
        norm2 = values["x"] ** 2 + values["y"] ** 2 + z ** 2
        if abs(norm2 - 1) > UNIT_TOLERANCE:
            raise ValueError(f"not a unit vector (|I|² = {norm2!r})")
        return z

    @classmethod
    def normalized(cls, vector: Iterable[float]) -> "UnitImaginary":
        v = np.asarray(list(vector), dtype=float)
        if v.shape == (4,):
            v = v[1:]
        norm = float(np.sqrt(np.sum(np.square(v))))
        if norm == 0:
            raise ValueError("cannot normalise the zero vector")
        x, y, z = (float(c) for c in v / norm)
        return cls(x=x, y=y, z=z)

    @classmethod
    def coerce(cls, value: Any) -> "UnitImaginary":
        if isinstance(value, UnitImaginary):
            return value
        if isinstance(value, Quaternion):
            return cls.normalized(value.array)
        if isinstance(value, str):
            parts = [float(p) for p in value.strip().strip("[]").split(",")]
            return cls.normalized(parts)
        if isinstance(value, dict):
            return cls(**value)
        return cls.normalized(value)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_quaternion(self) -> Quaternion:
        return Quaternion(x=self.x, y=self.y, z=self.z)

    def point(self, x: float, y: float = 0.0) -> Quaternion:
        """ Returns x + yI in L_I. """
        return Quaternion.from_array(kernels.slice_points(x, y, self.vector))

    def __neg__(self) -> "UnitImaginary":
        return UnitImaginary(x=-self.x, y=-self.y, z=-self.z)

    def dot(self, other: "UnitImaginary") -> float:
        return float(np.dot(self.vector, other.vector))


I = UnitImaginary(x=1.0, y=0.0, z=0.0)  # noqa: E741
J = UnitImaginary(x=0.0, y=1.0, z=0.0)
K = UnitImaginary(x=0.0, y=0.0, z=1.0)


class PolarForm(BaseModel):
    """
    The decomposition q = r e^{Iθ} = r (cos θ + I sin θ) with θ ∈ [0, π].

    For real q the axis is undefined and `real_axis` is set instead.
    """

    r: float = Field(..., ge=0)
    axis: Optional[UnitImaginary] = None
    theta: float = Field(..., ge=0, le=np.pi)
    real_axis: bool = False

    class Config:
        extra = Extra.forbid
        frozen = True

    @validator("real_axis", always=True)
    def _axis_or_flag(cls, real_axis: bool, values: dict) -> bool:
        if values.get("axis") is None and not real_axis:
            raise ValueError("polar form without an axis must set real_axis")
        theta = values.get("theta")
        if theta is not None and (theta == 0 or theta == np.pi) and not real_axis:
            raise ValueError("θ = 0 or θ = π must set real_axis")
        return real_axis

    def reconstruct(self) -> Quaternion:
        if self.axis is None:
            return Quaternion.real(self.r * np.cos(self.theta))
        return Quaternion.from_array(kernels.polar_points(self.r, self.theta, self.axis.vector))
