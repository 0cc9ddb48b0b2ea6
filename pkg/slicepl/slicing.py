"""
Slicewise analysis of function expressions: the splitting F + G·J of a restriction f_I, Cauchy–Riemann residuals,
sampled slice preservation, restricted products and compositions, coefficient recovery on a single slice and the
maximum modulus property on balls.
"""
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel

from slicepl import kernels
from slicepl.domains.ball import Ball
from slicepl.errors import FunctionDomainError, InputError
from slicepl.functions import Compose, Product
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import Quaternion, UnitImaginary
from slicepl.utils.sphere import spiral_grid, sphere3_directions

ORTHOGONALITY_TOLERANCE = 1e-12
SLICE_TOLERANCE = 1e-10

SlicePoint = Union[complex, float, Quaternion]


def orthogonal_unit(axis: UnitImaginary) -> UnitImaginary:
    """
    Returns a unit J ⊥ I: the basis vector least aligned with I, made orthogonal to it. For I = i this is j.
    """
    v = axis.vector
    e = np.zeros(3)
    e[int(np.argmin(np.abs(v)))] = 1.0
    return UnitImaginary.normalized(e - np.dot(e, v) * v)


def _check_orthogonal(axis: UnitImaginary, other: UnitImaginary) -> None:
    if abs(axis.dot(other)) > ORTHOGONALITY_TOLERANCE:
        raise InputError(f"J = {other.vector} is not orthogonal to I = {axis.vector}")


def slice_point(z: SlicePoint, axis: UnitImaginary) -> Quaternion:
    """
    Reads z as a point of L_I: a complex number x + yi stands for x + yI.

    :raises InputError: If z is a quaternion off the slice.
    """
    if isinstance(z, Quaternion):
        distance = float(kernels.off_slice_norm(z.array, axis.vector))
        if distance > ORTHOGONALITY_TOLERANCE * max(1.0, z.modulus()):
            raise InputError(f"{z} does not lie on the slice of I = {axis.vector}")
        return z
    z = complex(z)
    return axis.point(z.real, z.imag)


def split_values(
    values: np.ndarray, axis: UnitImaginary, other: UnitImaginary
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Writes quaternions v = a + bI + cJ + d(IJ) as the complex pairs (a + bi, c + di), i.e. F and G with
    v = F + G·J.
    """
    ij = np.cross(axis.vector, other.vector)
    v = values[..., 1:]
    a = values[..., 0]
    b = v @ axis.vector
    c = v @ other.vector
    d = v @ ij
    return a + 1j * b, c + 1j * d


def join_values(
    first: np.ndarray, second: np.ndarray, axis: UnitImaginary, other: UnitImaginary
) -> np.ndarray:
    """ F + G·J for complex arrays F and G read on L_I. """
    first = np.asarray(first, dtype=complex)
    second = np.asarray(second, dtype=complex)
    ij = np.cross(axis.vector, other.vector)
    out = np.empty(np.shape(first) + (4,))
    out[..., 0] = first.real
    out[..., 1:] = (
        first.imag[..., None] * axis.vector
        + second.real[..., None] * other.vector
        + second.imag[..., None] * ij
    )
    return out


class SplitPair(BaseModel):
    """
    The values F(z), G(z) ∈ L_I of the splitting f_I = F + G·J at one point, stored as (real, I-coefficient)
    pairs.
    """

    F: Tuple[float, float]
    G: Tuple[float, float]
    I: UnitImaginary  # noqa: E741
    J: UnitImaginary

    @property
    def first(self) -> Quaternion:
        return self.I.point(*self.F)

    @property
    def second(self) -> Quaternion:
        return self.I.point(*self.G)

    def reconstruct(self) -> Quaternion:
        return Quaternion.from_array(
            join_values(complex(*self.F), complex(*self.G), self.I, self.J)
        )


def split(
    f: BaseFunction,
    axis: UnitImaginary,
    other: UnitImaginary,
    z: SlicePoint,
) -> SplitPair:
    """
    Splits the value of f at z ∈ L_I along the basis {1, I, J, IJ}.

    :raises InputError: If J is not orthogonal to I or z is off the slice.
    :raises FunctionDomainError: If z is outside the domain of f.
    """
    _check_orthogonal(axis, other)
    value = f(slice_point(z, axis))
    first, second = split_values(value.array, axis, other)
    return SplitPair(
        F=(float(first.real), float(first.imag)),
        G=(float(second.real), float(second.imag)),
        I=axis,
        J=other,
    )


def cr_residual(
    f: BaseFunction, axis: UnitImaginary, z: SlicePoint, h: float = 1e-4
) -> float:
    """
    |½(∂_x + I∂_y) f_I| at z by central differences of step h, with I multiplied on the left.

    :raises InputError: If h ≤ 0.
    :raises FunctionDomainError: If the stencil leaves the domain of f.
    """
    if h <= 0:
        raise InputError(f"finite difference step must be positive, got {h}")
    centre = slice_point(z, axis).array
    unit = kernels.slice_points(0.0, 1.0, axis.vector)
    stencil = np.stack(
        [
            centre + h * kernels.ONE,
            centre - h * kernels.ONE,
            centre + h * unit,
            centre - h * unit,
        ]
    )
    values = f.evaluate(stencil)
    bad = np.isnan(values).any(axis=-1)
    if bad.any():
        point = stencil[int(np.argmax(bad))]
        node = f.locate_domain_error(point)
        raise FunctionDomainError(
            f"finite difference stencil at {Quaternion.from_array(point)} leaves the domain of the "
            f"{node.type} node",
            node=node,
            value=Quaternion.from_array(point),
        )
    dx = (values[0] - values[1]) / (2 * h)
    dy = (values[2] - values[3]) / (2 * h)
    return float(kernels.qabs(0.5 * (dx + kernels.qmul(unit, dy))))


class ResidualCheck(BaseModel):
    """
    Residuals at steps h and h/10 with the threshold they are held to. For a slice regular function the
    residual is O(h²), so the second one should be about a hundredth of the first.
    """

    residual: float
    refined_residual: float
    threshold: float

    @property
    def ratio(self) -> float:
        if self.refined_residual == 0:
            return np.inf
        return self.residual / self.refined_residual

    @property
    def regular(self) -> bool:
        return self.residual <= self.threshold


def check_residual(
    f: BaseFunction,
    axis: UnitImaginary,
    z: SlicePoint,
    h: float = 1e-4,
    tolerance: float = 1e-6,
) -> ResidualCheck:
    """
    Compares the residual at z with tolerance·max(1, |f(z)|) and records a second residual at h/10.
    """
    scale = max(1.0, f(slice_point(z, axis)).modulus())
    check = ResidualCheck(
        residual=cr_residual(f, axis, z, h),
        refined_residual=cr_residual(f, axis, z, h / 10),
        threshold=tolerance * scale,
    )
    logger.debug(f"residual at {z}: {check.residual:.3g} (h={h}), {check.refined_residual:.3g} (h={h / 10})")
    return check


class SlicePreservingCheck(BaseModel):
    """
    A sampled check that f maps each slice into itself. A true verdict can be refuted by further samples but
    never proves the property; `structural` is the sound flag computed from the expression.
    """

    verdict: bool
    structural: bool
    samples: int
    max_defect: float
    witnesses: List[Quaternion]


def is_slice_preserving(
    f: BaseFunction,
    samples: Sequence[Tuple[UnitImaginary, SlicePoint]],
    tolerance: float = SLICE_TOLERANCE,
) -> SlicePreservingCheck:
    """
    Checks f(z) ∈ L_I for sample pairs (I, z) with z ∈ L_I.

    A sample fails when the part of f(z) along J and IJ exceeds tolerance·max(1, |f(z)|).
    """
    witnesses: List[Quaternion] = []
    max_defect = 0.0
    for axis, z in samples:
        point = slice_point(z, axis)
        value = f(point)
        defect = float(kernels.off_slice_norm(value.array, axis.vector))
        max_defect = max(max_defect, defect)
        if defect > tolerance * max(1.0, value.modulus()):
            witnesses.append(point)
    verdict = not witnesses
    if verdict != f.slice_preserving:
        logger.info(
            f"sampled slice preservation ({verdict}) differs from the structural flag ({f.slice_preserving})"
        )
    return SlicePreservingCheck(
        verdict=verdict,
        structural=f.slice_preserving,
        samples=len(samples),
        max_defect=max_defect,
        witnesses=witnesses,
    )


def default_slice_samples(n_axis: int = 16) -> List[Tuple[UnitImaginary, complex]]:
    """ The points 0.5 + 0.5i, −0.3 + 0.8i and 1 + 0i on the slices of a spiral grid. """
    points = [0.5 + 0.5j, -0.3 + 0.8j, 1.0 + 0j]
    return [
        (UnitImaginary.normalized(axis), z) for axis in spiral_grid(n_axis) for z in points
    ]


def product(f: BaseFunction, g: BaseFunction) -> Product:
    """
    The product f·g.

    :raises PropositionError: If f is not structurally slice preserving.
    """
    return Product(left=f, right=g)


def compose(g: BaseFunction, f: BaseFunction) -> Compose:
    """
    The composition g∘f.

    :raises PropositionError: If f is not structurally slice preserving.
    """
    return Compose(outer=g, inner=f)


def recover_coefficients(
    f: BaseFunction, axis: UnitImaginary, degree: int, radius: float = 0.5
) -> List[Quaternion]:
    """
    Recovers the coefficients a_n of a power series Σ q^n a_n of the given degree from its values at 2·degree + 1
    points of the circle of the given radius in L_I.

    On L_I the series splits as F(z) = Σ z^n A_n and G(z) = Σ z^n B_n with a_n = A_n + B_n·J, so both halves are
    found by least squares on the same complex Vandermonde system.
    """
    if degree < 0:
        raise InputError(f"degree must be nonnegative, got {degree}")
    other = orthogonal_unit(axis)
    count = 2 * degree + 1
    nodes = radius * np.exp(2j * np.pi * np.arange(count) / count)
    points = kernels.slice_points(nodes.real, nodes.imag, axis.vector)
    values = f.evaluate(points)
    if np.isnan(values).any():
        raise FunctionDomainError(
            "interpolation nodes leave the domain of the function", node=f, value=radius
        )
    first, second = split_values(values, axis, other)
    vandermonde = np.vander(nodes, degree + 1, increasing=True)
    solution, *_ = np.linalg.lstsq(vandermonde, np.stack([first, second], axis=-1), rcond=None)
    coeffs = join_values(solution[:, 0], solution[:, 1], axis, other)
    return [Quaternion.from_array(c) for c in coeffs]


def coincide_on_slice(
    f: BaseFunction,
    g: BaseFunction,
    axis: UnitImaginary,
    points: Sequence[SlicePoint],
    tolerance: float = 1e-12,
) -> bool:
    """ True when |f(z) − g(z)| ≤ tolerance·max(1, |f(z)|) at each of the given points of L_I. """
    for z in points:
        point = slice_point(z, axis)
        fz = f(point)
        if (fz - g(point)).modulus() > tolerance * max(1.0, fz.modulus()):
            return False
    return True


class MaxModulusCheck(BaseModel):
    """
    Grid maxima of |f| inside a ball and on its boundary sphere.
    """

    interior_max: float
    boundary_max: float
    interior_samples: int
    boundary_samples: int
    argmax: Optional[Quaternion] = None

    @property
    def excess(self) -> float:
        return self.interior_max - self.boundary_max

    def holds(self, tolerance: float = 1e-6) -> bool:
        return self.excess <= tolerance


def _ball_points(ball: Ball, radii: np.ndarray, axes: np.ndarray, n_theta: int) -> np.ndarray:
    directions = sphere3_directions(axes, n_theta).reshape(-1, 4)
    return ball.center.array + radii[:, None, None] * directions[None, :, :]


def max_modulus_grid_check(
    f: BaseFunction,
    ball: Ball,
    n_interior: int = 16,
    n_boundary: Optional[int] = None,
    n_theta: int = 17,
    n_radii: int = 10,
) -> MaxModulusCheck:
    """
    Compares the maximum of |f| over interior shells of radius up to 0.9R with the maximum over the sphere of
    radius R.

    The boundary grid holds, at ten times the angular density, the whole circle of every interior slice (the axes
    I and −I), plus a spiral grid of n_boundary axes (ten times n_interior by default).
    """
    if n_boundary is None:
        n_boundary = 10 * n_interior
    axes = spiral_grid(n_interior)
    radii = ball.radius * np.linspace(0.0, 0.9, n_radii)
    interior = _ball_points(ball, radii, axes, n_theta).reshape(-1, 4)
    outer = np.array([ball.radius])
    boundary = np.concatenate(
        [
            _ball_points(ball, outer, np.concatenate([axes, -axes]), 10 * n_theta).reshape(-1, 4),
            _ball_points(ball, outer, spiral_grid(n_boundary), 10 * n_theta).reshape(-1, 4),
        ]
    )
    inside = f.modulus(interior)
    edge = f.modulus(boundary)
    best = int(np.nanargmax(inside))
    check = MaxModulusCheck(
        interior_max=float(inside[best]),
        boundary_max=float(np.nanmax(edge)),
        interior_samples=len(interior),
        boundary_samples=len(boundary),
        argmax=Quaternion.from_array(interior[best]),
    )
    logger.debug(f"interior maximum {check.interior_max:.6g}, boundary maximum {check.boundary_max:.6g}")
    return check
