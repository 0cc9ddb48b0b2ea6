from typing import Literal, Optional

import numpy as np

from slicepl import kernels
from slicepl.models.domain import BaseDomain, domain_type, empty_grid


@domain_type()
class WholeSpace(BaseDomain):
    """
    All of ℍ. It has no boundary, so boundary grids are empty.
    """

    type: Literal["whole"] = "whole"

    def slice_margin(self, axes: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        shape = np.broadcast_shapes(np.shape(axes)[:-1], np.shape(x), np.shape(y))
        return np.full(shape, np.inf)

    @property
    def slice_hypothesis(self) -> Optional[bool]:
        return True

    def shell_grid(
        self, r: float, n_theta: int, axes: np.ndarray, closed: bool = True
    ) -> np.ndarray:
        theta = np.linspace(0.0, np.pi, n_theta)
        return kernels.polar_points(r, theta[None, :], axes[:, None, :])

    def boundary_grid(self, r: float, n_theta: int, axes: np.ndarray) -> np.ndarray:
        return empty_grid(len(axes), 0)

    def near_boundary_grid(
        self, r: float, n_theta: int, axes: np.ndarray, offset: float
    ) -> np.ndarray:
        return empty_grid(len(axes), 0)
