from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

import numpy as np
from pydantic import BaseModel, Extra

from slicepl import kernels
from slicepl.errors import InputError
from slicepl.models.quaternion import Quaternion, QuaternionLike
from slicepl.utils.registry import Registry
from slicepl.utils.sphere import spiral_grid

# Points closer than this to the boundary, relative to max(1, |q|), are not members.
BOUNDARY_TOLERANCE = 1e-12
REFERENCE_AXES = 64


class BaseDomain(BaseModel, ABC):
    """
    An open subset Ω of ℍ described slice by slice.

    Every slice Ω_I = Ω ∩ L_I is given through `slice_margin`, which is positive exactly at points x + yI of Ω_I
    and zero on its boundary. Sample grids are arrays of shape (n_axis, m, 4), one row per imaginary unit of the axis
    grid; rows hold NaN where a domain has fewer than m points on a shell.
    """

    type: str

    class Config:
        extra = Extra.forbid
        frozen = True
        copy_on_model_validation = "none"

    @classmethod
    def validate(cls, value: Any) -> "BaseDomain":
        if isinstance(value, cls):
            return value
        if not isinstance(value, dict):
            raise TypeError(f"expected a domain or spec mapping, got {value!r}")
        try:
            member = DomainRegistry.lookup(value.get("type"))
        except KeyError as exc:
            raise ValueError(exc.args[0]) from exc
        return member(**value)

    @property
    def bounded(self) -> bool:
        return False

    @property
    def slice_hypothesis(self) -> Optional[bool]:
        """
        Whether Ω ∖ (−∞, t] or Ω ∖ [t, +∞) is known to be a slice domain for some real t; None when the
        family gives no such guarantee.
        """
        return None

    @abstractmethod
    def slice_margin(self, axes: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        Signed margin of x + yI inside Ω_I, broadcast over axes (..., 3) and coordinates (...).
        """
        ...

    def contains_points(self, q: np.ndarray) -> np.ndarray:
        """
        Strict membership for an array of quaternions.

        A non-real point belongs to the slice of its own axis. A real point belongs to Ω when it lies in any slice
        of a reference axis grid.
        """
        q = kernels.as_array(q)
        w, _, nv = kernels.split_parts(q)
        tolerance = BOUNDARY_TOLERANCE * np.maximum(1.0, kernels.qabs(q))
        axes = kernels.axis_of(q)
        axes = np.where(np.isnan(axes), 0.0, axes)
        with np.errstate(invalid="ignore"):
            inside = self.slice_margin(axes, w, nv) > tolerance
        real = nv == 0
        if np.any(real):
            reference = spiral_grid(REFERENCE_AXES)
            wr = w[real][:, None]
            margins = self.slice_margin(reference[None, :, :], wr, np.zeros_like(wr))
            inside[real] = np.any(margins > tolerance[real][:, None], axis=-1)
        return inside

    def contains(self, q: QuaternionLike) -> bool:
        return bool(self.contains_points(Quaternion.coerce(q).array[None, :])[0])

    @abstractmethod
    def shell_grid(
        self, r: float, n_theta: int, axes: np.ndarray, closed: bool = True
    ) -> np.ndarray:
        """
        Points of the closure of Ω (closed=True) or of Ω itself (closed=False) on the sphere |q| = r.
        """
        ...

    @abstractmethod
    def boundary_grid(self, r: float, n_theta: int, axes: np.ndarray) -> np.ndarray:
        """ Parametrised points of ∂Ω on the sphere |q| = r. """
        ...

    @abstractmethod
    def near_boundary_grid(
        self, r: float, n_theta: int, axes: np.ndarray, offset: float
    ) -> np.ndarray:
        """ The points of `boundary_grid` moved a distance offset·r into Ω. """
        ...

    def boundary_sample(self, r: float, n_theta: int, n_axis: int) -> np.ndarray:
        """
        Returns the boundary points at modulus r over a spiral axis grid as an (N, 4) array.

        :raises InputError: If r ≤ 0.
        """
        if r <= 0:
            raise InputError(f"boundary radius must be positive, got {r}")
        grid = self.boundary_grid(r, n_theta, spiral_grid(n_axis)).reshape(-1, 4)
        return grid[~np.isnan(grid).any(axis=-1)]

    def extent(self, axes: np.ndarray) -> float:
        """ Half-width of a planar box which shows the shape of every slice. """
        return 1.0

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type}

    def __str__(self) -> str:
        return repr(self.to_spec())


DomainRegistry = Registry(BaseDomain)
domain_type = DomainRegistry.member


def empty_grid(n_axis: int, m: int) -> np.ndarray:
    return np.full((n_axis, m, 4), np.nan)
