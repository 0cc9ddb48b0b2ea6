"""
Scalar quaternion operations.

These wrap the vectorised kernels for single values and raise `QuaternionDomainError` instead of returning NaN.
"""
import numpy as np

from slicepl import kernels
from slicepl.errors import QuaternionDomainError
from slicepl.models.quaternion import PolarForm, Quaternion, QuaternionLike, UnitImaginary

NEGATIVE_HALF_LINE = "(-inf, 0]"
POSITIVE_HALF_LINE = "[0, +inf)"


def mul(p: QuaternionLike, q: QuaternionLike) -> Quaternion:
    return Quaternion.coerce(p) * Quaternion.coerce(q)


def conjugate(q: QuaternionLike) -> Quaternion:
    return Quaternion.coerce(q).conjugate()


def inverse(q: QuaternionLike) -> Quaternion:
    q = Quaternion.coerce(q)
    if q.modulus() == 0:
        raise QuaternionDomainError("zero has no inverse", value=q, excluded="{0}")
    return Quaternion.from_array(kernels.qinv(q.array))


def polar(q: QuaternionLike) -> PolarForm:
    q = Quaternion.coerce(q)
    w, _, nv = kernels.split_parts(q.array)
    r = float(np.hypot(w, nv))
    if nv == 0:
        theta = np.pi if w < 0 else 0.0
        return PolarForm(r=r, theta=theta, real_axis=True)
    return PolarForm(
        r=r,
        axis=UnitImaginary.normalized(q.array),
        theta=float(kernels.angle(q.array)),
    )


def from_polar(r: float, theta: float, axis: UnitImaginary) -> Quaternion:
    return Quaternion.from_array(kernels.polar_points(r, theta, axis.vector))


def principal_log(q: QuaternionLike) -> Quaternion:
    q = Quaternion.coerce(q)
    if not kernels.principal_log_mask(q.array):
        raise QuaternionDomainError(
            f"principal logarithm undefined at {q} on the half-line {NEGATIVE_HALF_LINE}",
            value=q,
            excluded=NEGATIVE_HALF_LINE,
        )
    return Quaternion.from_array(kernels.qlog(q.array))


def branch_log(q: QuaternionLike) -> Quaternion:
    q = Quaternion.coerce(q)
    if not kernels.branch_log_mask(q.array):
        raise QuaternionDomainError(
            f"second logarithm branch undefined at {q} on the half-line {POSITIVE_HALF_LINE}",
            value=q,
            excluded=POSITIVE_HALF_LINE,
        )
    return Quaternion.from_array(kernels.qlog_branch(q.array))


def qpow(q: QuaternionLike, gamma: float) -> Quaternion:
    return qexp(principal_log(q) * float(gamma))


def qexp(q: QuaternionLike) -> Quaternion:
    return Quaternion.from_array(kernels.qexp(Quaternion.coerce(q).array))
