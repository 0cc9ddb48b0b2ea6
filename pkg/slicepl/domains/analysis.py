"""
Grid based analysis of domains: suprema of openings and widths, slice-domain checks and the search for a slice
of an angular domain containing a real half-line.
"""
from typing import List, Optional

import numpy as np
from loguru import logger
from pydantic import BaseModel
from scipy import ndimage
from scipy.optimize import brentq

from slicepl.errors import InputError
from slicepl.models.domain import BaseDomain
from slicepl.models.quaternion import UnitImaginary
from slicepl.utils.sphere import orthonormal_complement, refined_grid, spiral_grid

from .profiles import BaseProfile
from .sector import SectorDomain, check_sector_profiles
from .strip import StripDomain


class GridSupremum(BaseModel):
    """
    A supremum over 𝕊 approximated by grid maxima at two densities.
    """

    value: float
    coarse: float
    n_coarse: int
    n_refined: int
    argmax: UnitImaginary

    @property
    def refinement_delta(self) -> float:
        return self.value - self.coarse


def _grid_supremum(values_of, n_axis: int) -> GridSupremum:
    coarse_axes = spiral_grid(n_axis)
    axes = refined_grid(n_axis)
    coarse = float(np.max(values_of(coarse_axes)))
    values = values_of(axes)
    best = int(np.argmax(values))
    return GridSupremum(
        value=float(values[best]),
        coarse=coarse,
        n_coarse=len(coarse_axes),
        n_refined=len(axes),
        argmax=UnitImaginary.normalized(axes[best]),
    )


def opening(domain: SectorDomain, n_axis: int = 512) -> GridSupremum:
    """
    sup φ_I over 𝕊.
    """
    if not isinstance(domain, SectorDomain):
        raise InputError(f"{domain.type} domain has no opening")
    return _grid_supremum(domain.openings, n_axis)


def width(domain: StripDomain, n_axis: int = 512) -> GridSupremum:
    """
    sup γ_I over 𝕊.
    """
    if not isinstance(domain, StripDomain):
        raise InputError(f"{domain.type} domain has no width")
    return _grid_supremum(domain.widths, n_axis)


class SliceDomainCheck(BaseModel):
    """
    Result of a grid check that a domain is a slice domain. A true verdict is grid-certified only.
    """

    verdict: bool
    real_point: Optional[float]
    components: List[int]
    resolution: int
    grid_certified: bool = True


def is_slice_domain(domain: BaseDomain, resolution: int = 129, n_axis: int = 16) -> SliceDomainCheck:
    """
    Checks that Ω meets the real axis and that each sampled slice Ω_I is connected under a flood fill of a
    resolution × resolution grid.
    """
    axes = spiral_grid(n_axis)
    half = domain.extent(axes)
    t = np.linspace(-half, half, resolution)
    reals = domain.contains_points(np.stack([t, 0 * t, 0 * t, 0 * t], axis=-1))
    real_point = float(t[np.argmax(reals)]) if np.any(reals) else None

    x, y = np.meshgrid(t, t, indexing="ij")
    components = []
    for axis in axes:
        mask = domain.slice_margin(axis, x, y) > 0
        _, count = ndimage.label(mask, structure=np.ones((3, 3)))
        components.append(int(count))

    connected = all(count <= 1 for count in components)
    verdict = real_point is not None and connected and any(c == 1 for c in components)
    if verdict:
        logger.warning(f"{domain} is a slice domain at grid resolution {resolution} only")
    return SliceDomainCheck(
        verdict=verdict, real_point=real_point, components=components, resolution=resolution
    )


class HalfLineWitness(BaseModel):
    """
    A unit J with ζ_J ∈ {0, π} (mod 2π), i.e. a slice whose angle contains a real half-line.
    """

    found: bool
    axis: Optional[UnitImaginary]
    distance: float
    method: str


def _distance_to_real(zeta: np.ndarray) -> np.ndarray:
    return np.abs(zeta - np.pi * np.round(zeta / np.pi))


def real_halfline_witness(
    zeta: BaseProfile,
    phi: Optional[BaseProfile] = None,
    n_axis: int = 512,
    tolerance: float = 1e-9,
) -> HalfLineWitness:
    """
    Searches 𝕊 for J whose bisector ζ_J lies on the real axis.

    The grid minimiser J₀ is refined by bisection of sin ζ along the great circle from J₀ to −J₀, where the
    antipodal symmetry ζ_{−J} = −ζ_J forces a sign change.

    :raises InputError: If the profiles break the antipodal symmetry of the slices.
    """
    check_sector_profiles(zeta, phi)
    axes = spiral_grid(n_axis)
    distances = _distance_to_real(zeta.values(axes))
    best = int(np.argmin(distances))
    start = axes[best]
    if distances[best] <= tolerance:
        return HalfLineWitness(
            found=True,
            axis=UnitImaginary.normalized(start),
            distance=float(distances[best]),
            method="grid",
        )

    other = orthonormal_complement(start)[0]

    def along(t: float) -> np.ndarray:
        return np.cos(t) * start + np.sin(t) * other

    def sine(t: float) -> float:
        return float(np.sin(zeta.values(along(t))))

    if sine(0.0) * sine(np.pi) > 0:
        logger.warning("no sign change of sin ζ between J and -J; is the profile continuous?")
        return HalfLineWitness(
            found=False, axis=None, distance=float(distances[best]), method="grid"
        )
    t = brentq(sine, 0.0, np.pi, xtol=1e-14)
    axis = along(t)
    distance = float(_distance_to_real(zeta.values(axis)))
    found = distance <= tolerance
    if not found:
        logger.warning(f"half-line search stopped at distance {distance:.3g}")
    return HalfLineWitness(
        found=found,
        axis=UnitImaginary.normalized(axis) if found else None,
        distance=distance,
        method="bisection",
    )
