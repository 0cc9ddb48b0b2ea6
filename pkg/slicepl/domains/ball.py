from typing import Any, Dict, Literal, Optional, Tuple

import numpy as np
from pydantic import Field, validator

from slicepl import kernels
from slicepl.models.domain import BaseDomain, domain_type, empty_grid
from slicepl.models.quaternion import Quaternion
from slicepl.utils.sphere import orthonormal_complement, sphere3_directions, unit_steps


@domain_type()
class Ball(BaseDomain):
    """
    The open ball B(c, R) = {q : |q − c| < R}.
    """

    type: Literal["ball"] = "ball"
    center: Quaternion = Field(default_factory=Quaternion)
    radius: float = Field(..., gt=0)

    @validator("center", pre=True)
    def _coerce(cls, value: Any) -> Quaternion:
        return Quaternion.coerce(value)

    @property
    def bounded(self) -> bool:
        return True

    @property
    def slice_hypothesis(self) -> Optional[bool]:
        return True if self.center.is_real else None

    def slice_margin(self, axes: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        points = kernels.slice_points(x, y, axes)
        return self.radius - kernels.qabs(points - self.center.array)

    def _frame(self, axes: np.ndarray) -> Tuple[np.ndarray, np.ndarray, float]:
        """
        Returns the unit vector ĉ, unit vectors u ⊥ ĉ (one per axis) and |c|.
        """
        c = self.center.array
        norm = float(np.linalg.norm(c))
        unit = c / norm
        return unit, axes @ orthonormal_complement(unit), norm

    def _cap(self, r: float, angles: np.ndarray, axes: np.ndarray) -> np.ndarray:
        """ Points r(cos α ĉ + sin α u) for angles α of shape (m,). """
        unit, u, _ = self._frame(axes)
        return r * (
            np.cos(angles)[None, :, None] * unit[None, None, :]
            + np.sin(angles)[None, :, None] * u[:, None, :]
        )

    def _cap_cosine(self, r: float) -> float:
        """ cos α on the sphere |q − c| = R, from |q|² − 2⟨q, c⟩ + |c|² = R². """
        norm = float(np.linalg.norm(self.center.array))
        return (r * r + norm * norm - self.radius ** 2) / (2 * r * norm)

    def shell_grid(
        self, r: float, n_theta: int, axes: np.ndarray, closed: bool = True
    ) -> np.ndarray:
        if self.center.modulus() == 0:
            inside = r <= self.radius if closed else r < self.radius
            if not inside:
                return empty_grid(len(axes), n_theta)
            return r * sphere3_directions(axes, n_theta)
        cosine = self._cap_cosine(r)
        if cosine > 1 or (not closed and cosine >= 1):
            return empty_grid(len(axes), n_theta)
        widest = float(np.arccos(max(cosine, -1.0)))
        return self._cap(r, widest * unit_steps(n_theta, closed=closed), axes)

    def boundary_grid(self, r: float, n_theta: int, axes: np.ndarray) -> np.ndarray:
        if self.center.modulus() == 0:
            if not np.isclose(r, self.radius, rtol=1e-12, atol=0):
                return empty_grid(len(axes), n_theta)
            return r * sphere3_directions(axes, n_theta)
        cosine = self._cap_cosine(r)
        if abs(cosine) > 1:
            return empty_grid(len(axes), 1)
        return self._cap(r, np.array([np.arccos(cosine)]), axes)

    def near_boundary_grid(
        self, r: float, n_theta: int, axes: np.ndarray, offset: float
    ) -> np.ndarray:
        boundary = self.boundary_grid(r, n_theta, axes)
        towards = self.center.array - boundary
        with np.errstate(invalid="ignore"):
            towards = towards / np.linalg.norm(towards, axis=-1, keepdims=True)
        return boundary + offset * r * towards

    def extent(self, axes: np.ndarray) -> float:
        return self.center.modulus() + self.radius

    def to_spec(self) -> Dict[str, Any]:
        return {
            "type": self.type,
            "center": list(self.center.components()),
            "radius": self.radius,
        }
