from typing import Any, Dict, Literal, Tuple

import numpy as np
from pydantic import BaseModel, Extra, Field

from slicepl import kernels
from slicepl.errors import InputError
from slicepl.models.domain import REFERENCE_AXES, BaseDomain, domain_type
from slicepl.utils.sphere import spiral_grid, unit_steps

from .profiles import BaseProfile, Constant
from .sector import PROFILE_TOLERANCE

_PROBES = np.array([[0.0, 0.0], [1.0, 0.5], [-0.7, 2.0], [3.0, -1.5], [-2.5, -0.25]])


class StripLine(BaseModel):
    """
    The axis line ℓ_I = {x + yI : −x sin β_I + y cos β_I = c_I} of a strip, of direction e^{Iβ_I} at signed
    distance c_I from the origin. The defaults give the real axis.
    """

    offset: BaseProfile = Field(default_factory=lambda: Constant(value=0.0))
    angle: BaseProfile = Field(default_factory=lambda: Constant(value=0.0))

    class Config:
        extra = Extra.forbid
        frozen = True

    def frame(self, axes: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """ Returns (c_I, sin β_I, cos β_I). """
        beta = self.angle.values(axes)
        return self.offset.values(axes), np.sin(beta), np.cos(beta)

    def to_spec(self) -> Dict[str, Any]:
        return {"offset": self.offset.to_spec(), "angle": self.angle.to_spec()}


@domain_type()
class StripDomain(BaseDomain):
    """
    A domain whose slice Ω_I is the planar strip of width γ_I around the line ℓ_I.
    """

    type: Literal["strip"] = "strip"
    gamma: BaseProfile
    line: StripLine = Field(default_factory=StripLine)

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        self._check_profiles()

    def _check_profiles(self) -> None:
        axes = spiral_grid(REFERENCE_AXES)
        if not np.all(self.widths(axes) > 0):
            raise InputError("strip width profile must be positive")
        x, y = _PROBES[:, 0][:, None], _PROBES[:, 1][:, None]
        here = self.slice_margin(axes[None, :, :], x, y)
        there = self.slice_margin(-axes[None, :, :], x, -y)
        defect = float(np.max(np.abs(here - there)))
        if not defect <= PROFILE_TOLERANCE:
            raise InputError(
                f"strip profiles describe different sets on L_I and L_(-I) (defect {defect:.3g})"
            )

    def widths(self, axes: np.ndarray) -> np.ndarray:
        """ γ_I """
        return self.gamma.values(axes)

    def slice_margin(self, axes: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        c, sin, cos = self.line.frame(axes)
        return self.widths(axes) / 2 - np.abs(-x * sin + y * cos - c)

    def _points(
        self, s: np.ndarray, w: np.ndarray, axes: np.ndarray, sin: np.ndarray, cos: np.ndarray
    ) -> np.ndarray:
        """
        Points s·n ± w·t for the unit normal n = (−sin β, cos β) and direction t = (cos β, sin β) of each line,
        with s and w of shape (n_axis, m); the result has shape (n_axis, 2m, 4).
        """
        sin, cos = sin[:, None], cos[:, None]
        grids = [
            kernels.slice_points(-s * sin + sign * w * cos, s * cos + sign * w * sin, axes[:, None, :])
            for sign in (1.0, -1.0)
        ]
        return np.concatenate(grids, axis=1)

    def shell_grid(
        self, r: float, n_theta: int, axes: np.ndarray, closed: bool = True
    ) -> np.ndarray:
        c, sin, cos = self.line.frame(axes)
        half = self.widths(axes) / 2
        lo = np.maximum(c - half, -r)
        hi = np.minimum(c + half, r)
        m = (n_theta + 1) // 2
        s = lo[:, None] + (hi - lo)[:, None] * unit_steps(m, closed=closed)[None, :]
        with np.errstate(invalid="ignore"):
            w = np.sqrt(r * r - s * s)
        grid = self._points(s, w, axes, sin, cos)
        empty = (lo > hi) if closed else (lo >= hi)
        grid[empty] = np.nan
        return grid

    def _edges(self, axes: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        c, sin, cos = self.line.frame(axes)
        half = self.widths(axes) / 2
        s = np.stack([c - half, c + half], axis=-1)
        inward = np.array([1.0, -1.0])[None, :] * np.ones_like(s)
        return s, inward, sin, cos

    def boundary_grid(self, r: float, n_theta: int, axes: np.ndarray) -> np.ndarray:
        s, _, sin, cos = self._edges(axes)
        with np.errstate(invalid="ignore"):
            w = np.sqrt(r * r - s * s)
        return self._points(s, w, axes, sin, cos)

    def near_boundary_grid(
        self, r: float, n_theta: int, axes: np.ndarray, offset: float
    ) -> np.ndarray:
        s, inward, sin, cos = self._edges(axes)
        with np.errstate(invalid="ignore"):
            w = np.sqrt(r * r - s * s)
        return self._points(s + inward * offset * r, w, axes, sin, cos)

    def extent(self, axes: np.ndarray) -> float:
        c, _, _ = self.line.frame(axes)
        return float(np.max(np.abs(c) + self.widths(axes) / 2)) + 1.0

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "gamma": self.gamma.to_spec(), "line": self.line.to_spec()}
