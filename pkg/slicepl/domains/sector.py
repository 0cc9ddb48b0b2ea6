from abc import abstractmethod
from typing import Any, Dict, Literal, Optional

import numpy as np
from pydantic import Field

from slicepl import kernels
from slicepl.errors import InputError
from slicepl.models.domain import REFERENCE_AXES, BaseDomain, domain_type
from slicepl.utils.sphere import spiral_grid, symmetric_steps

from .profiles import BaseProfile, Constant

PROFILE_TOLERANCE = 1e-9


def wrap_angle(a: np.ndarray) -> np.ndarray:
    """ Reduces angles to [−π, π). """
    return np.mod(np.asarray(a) + np.pi, 2 * np.pi) - np.pi


class SectorDomain(BaseDomain):
    """
    A domain whose slices are planar angles Ω_I = {r e^{I(ζ_I + θ)} : r > 0, |θ| < φ_I/2}.
    """

    @abstractmethod
    def bisectors(self, axes: np.ndarray) -> np.ndarray:
        """ ζ_I """
        ...

    @abstractmethod
    def openings(self, axes: np.ndarray) -> np.ndarray:
        """ φ_I """
        ...

    def slice_margin(self, axes: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        zeta = self.bisectors(axes)
        phi = self.openings(axes)
        rel = wrap_angle(np.arctan2(y, x) - zeta)
        # scaled by the radius so that margins are distances, like those of strips and balls
        return np.hypot(x, y) * (phi / 2 - np.abs(rel))

    def relative_angles(self, n_theta: int, axes: np.ndarray, closed: bool = True) -> np.ndarray:
        """ The angles θ from the bisector used by `shell_grid`, of shape (n_axis, n_theta). """
        t = symmetric_steps(n_theta, closed=closed)
        return t[None, :] * self.openings(axes)[:, None] / 2

    def shell_grid(
        self, r: float, n_theta: int, axes: np.ndarray, closed: bool = True
    ) -> np.ndarray:
        angles = self.bisectors(axes)[:, None] + self.relative_angles(n_theta, axes, closed)
        return kernels.polar_points(r, angles, axes[:, None, :])

    def _edge_angles(self, axes: np.ndarray, inset: float) -> np.ndarray:
        zeta = self.bisectors(axes)[:, None]
        half = self.openings(axes)[:, None] / 2 - inset
        return zeta + np.array([-1.0, 1.0])[None, :] * half

    def boundary_grid(self, r: float, n_theta: int, axes: np.ndarray) -> np.ndarray:
        return kernels.polar_points(r, self._edge_angles(axes, 0.0), axes[:, None, :])

    def near_boundary_grid(
        self, r: float, n_theta: int, axes: np.ndarray, offset: float
    ) -> np.ndarray:
        # an arc of length offset·r on the circle of radius r
        return kernels.polar_points(r, self._edge_angles(axes, offset), axes[:, None, :])


@domain_type()
class CircularCone(SectorDomain):
    """
    C(φ) = {r e^{Iθ} : r > 0, |θ| < φ/2, I ∈ 𝕊}.
    """

    type: Literal["cone"] = "cone"
    phi: float = Field(..., gt=0, lt=2 * np.pi, description="Opening angle.")

    def bisectors(self, axes: np.ndarray) -> np.ndarray:
        return np.zeros(np.shape(axes)[:-1])

    def openings(self, axes: np.ndarray) -> np.ndarray:
        return np.full(np.shape(axes)[:-1], self.phi)

    @property
    def slice_hypothesis(self) -> Optional[bool]:
        return True

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "phi": self.phi}


@domain_type()
class AngularDomain(SectorDomain):
    """
    A domain whose slice Ω_I is the angle of opening φ_I around the ray of direction e^{Iζ_I}.

    The profiles must describe the same set from both sides of every slice, Ω_I = Ω_{−I}, which means
    ζ_{−I} = −ζ_I (mod 2π) and φ_{−I} = φ_I. This is checked on a reference grid when the domain is built.
    """

    type: Literal["angular"] = "angular"
    zeta: BaseProfile = Field(default_factory=lambda: Constant(value=0.0))
    phi: BaseProfile

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        check_sector_profiles(self.zeta, self.phi)

    def bisectors(self, axes: np.ndarray) -> np.ndarray:
        return self.zeta.values(axes)

    def openings(self, axes: np.ndarray) -> np.ndarray:
        return self.phi.values(axes)

    @property
    def slice_hypothesis(self) -> Optional[bool]:
        if self.zeta.constant and self.phi.constant:
            zeta = float(self.zeta.values(np.array([1.0, 0.0, 0.0])))
            return True if zeta == 0 else None
        return None

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "zeta": self.zeta.to_spec(), "phi": self.phi.to_spec()}


def check_sector_profiles(
    zeta: BaseProfile, phi: Optional[BaseProfile] = None, n_axis: int = REFERENCE_AXES
) -> None:
    """
    :raises InputError: If φ_I leaves (0, 2π) or the profiles break the antipodal symmetry of the slices.
    """
    axes = spiral_grid(n_axis)
    zeta_defect = float(np.max(np.abs(wrap_angle(zeta.values(axes) + zeta.values(-axes)))))
    if not zeta_defect <= PROFILE_TOLERANCE:
        raise InputError(
            f"bisector profile violates ζ_(-I) = -ζ_I (defect {zeta_defect:.3g}), so Ω_I ≠ Ω_(-I)"
        )
    if phi is None:
        return
    values = phi.values(axes)
    if not np.all((values > 0) & (values < 2 * np.pi)):
        raise InputError("opening profile must take values in (0, 2π)")
    phi_defect = float(np.max(np.abs(values - phi.values(-axes))))
    if not phi_defect <= PROFILE_TOLERANCE:
        raise InputError(
            f"opening profile violates φ_(-I) = φ_I (defect {phi_defect:.3g}), so Ω_I ≠ Ω_(-I)"
        )
