"""
The auxiliary functions used to push a boundary bound into an unbounded domain: the slice preserving maps

    ω_r(q) = q⁻¹ r,    ω_r^δ(q) = e^{δ Log ω_r(q)},    ω^δ(q) = e^{−δ q^γ},

with |ω_r(q)| = r/|q|, |ω_r^δ(q)| = (r/|q|)^δ and |ω^δ(r e^{Iθ})| = e^{−δ r^γ cos γθ}. Each is available as
a scalar function and as a function expression which can be multiplied with f on the left.
"""
import numpy as np

from slicepl import quaternion
from slicepl.config import Config
from slicepl.domains.sector import CircularCone
from slicepl.errors import InputError
from slicepl.functions import Compose, Exp, Inverse, Pow, PrincipalLog, Product, RightScale
from slicepl.growth import shell_maximum
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import Quaternion, QuaternionLike


def _positive(name: str, value: float) -> None:
    if not value > 0:
        raise InputError(f"{name} must be positive, got {value}")


def omega_r(q: QuaternionLike, r: float) -> Quaternion:
    _positive("r", r)
    return quaternion.inverse(q) * r


def omega_r_delta(q: QuaternionLike, r: float, delta: float) -> Quaternion:
    _positive("delta", delta)
    return quaternion.qexp(quaternion.principal_log(omega_r(q, r)) * delta)


def exp_damp(q: QuaternionLike, delta: float, gamma: float) -> Quaternion:
    _positive("delta", delta)
    _positive("gamma", gamma)
    return quaternion.qexp(quaternion.qpow(q, gamma) * -delta)


def omega_function(r: float) -> BaseFunction:
    _positive("r", r)
    return RightScale(c=r, arg=Inverse())


def omega_delta_function(r: float, delta: float) -> BaseFunction:
    _positive("delta", delta)
    log_omega = Compose(outer=PrincipalLog(), inner=omega_function(r))
    return Compose(outer=Exp(), inner=RightScale(c=delta, arg=log_omega))


def exp_damp_function(delta: float, gamma: float) -> BaseFunction:
    _positive("delta", delta)
    _positive("gamma", gamma)
    return Exp(arg=RightScale(c=-delta, arg=Pow(gamma=gamma)))


def damped_shell_max(
    f: BaseFunction,
    alpha: float,
    gamma: float,
    delta: float,
    r: float,
    config: Config = Config(),
) -> float:
    """
    max |ω^δ f| over the shell of radius r of the cone C(π/α). For f of order below γ < α it tends to 0 as r
    grows.
    """
    if not alpha > 0.5:
        raise InputError(f"the cone C(π/α) needs α > 1/2, got {alpha}")
    cone = CircularCone(phi=np.pi / alpha)
    damped = Product(left=exp_damp_function(delta, gamma), right=f)
    return shell_maximum(damped, cone, r, config.n_theta, config.n_axis).value
