import os

import numpy as np
import pytest

from slicepl.domains import (
    AngularDomain,
    Ball,
    CallableProfile,
    CircularCone,
    Constant,
    Harmonic,
    StripDomain,
    WholeSpace,
    is_slice_domain,
    opening,
    real_halfline_witness,
    width,
)
from slicepl.domains.profiles import BaseProfile
from slicepl.errors import InputError
from slicepl.models.quaternion import I, K
from slicepl.specs import load_domain


def test_opening_of_harmonic_profile(domains: str) -> None:
    domain = load_domain(os.path.join(domains, "angular.yml"))
    sup = opening(domain)
    assert sup.value == pytest.approx(np.pi / 2 + 0.1, abs=1e-3)
    assert sup.value >= sup.coarse
    assert sup.refinement_delta >= 0
    assert abs(sup.argmax.z) == pytest.approx(1.0, abs=1e-2)


def test_opening_and_width_of_constant_profiles() -> None:
    assert opening(CircularCone(phi=1.0)).value == 1.0
    assert width(StripDomain(gamma=2.0)).value == 2.0
    assert width(StripDomain(gamma=2.0)).refinement_delta == 0.0


def test_opening_should_need_a_sector() -> None:
    with pytest.raises(InputError):
        opening(StripDomain(gamma=1.0))
    with pytest.raises(InputError):
        width(CircularCone(phi=1.0))


@pytest.mark.parametrize(
    "domain",
    [
        CircularCone(phi=0.5),
        CircularCone(phi=np.pi / 2),
        CircularCone(phi=np.pi),
        CircularCone(phi=1.5 * np.pi),
        Ball(radius=1.0),
        StripDomain(gamma=2.0),
        WholeSpace(),
    ],
)
def test_is_slice_domain_should_accept(domain) -> None:
    check = is_slice_domain(domain)
    assert check.verdict
    assert check.grid_certified
    assert check.real_point is not None
    assert all(count == 1 for count in check.components)


def test_is_slice_domain_should_reject_ball_off_the_real_axis() -> None:
    check = is_slice_domain(Ball(center=[0, 1, 0, 0], radius=0.5))
    assert not check.verdict
    assert check.real_point is None


def test_is_slice_domain_with_callable_width() -> None:
    profile = CallableProfile(func=lambda axes: 1.0 + axes[..., 2] ** 2)
    domain = StripDomain(gamma=profile)
    assert width(domain).value == pytest.approx(2.0, abs=1e-2)
    assert is_slice_domain(domain).verdict


def test_halfline_witness_on_grid() -> None:
    witness = real_halfline_witness(Constant(value=0.0))
    assert witness.found
    assert witness.method == "grid"
    assert witness.distance == 0.0


def test_halfline_witness_for_bisector_pi() -> None:
    witness = real_halfline_witness(Constant(value=np.pi), Constant(value=1.0))
    assert witness.found
    assert witness.distance <= 1e-12


def test_halfline_witness_by_bisection() -> None:
    zeta = Harmonic(amplitude=0.5, direction=K.vector, power=1)
    witness = real_halfline_witness(zeta)
    assert witness.found
    assert witness.method == "bisection"
    assert witness.distance <= 1e-9
    assert abs(witness.axis.z) <= 1e-8, "ζ vanishes on the great circle orthogonal to k"
    domain = AngularDomain(zeta=zeta, phi=Constant(value=1.0))
    assert domain.contains(witness.axis.point(5.0, 0.1))


def test_halfline_witness_should_reject_asymmetric_bisector() -> None:
    with pytest.raises(InputError):
        real_halfline_witness(Constant(value=1.0))


@pytest.mark.parametrize(
    "value, expected",
    [
        (1.5, Constant(value=1.5)),
        ("pi", Constant(value=np.pi)),
        ({"type": "constant", "value": 2.0}, Constant(value=2.0)),
    ],
)
def test_profile_should_accept_spec_forms(value, expected: BaseProfile) -> None:
    assert BaseProfile.validate(value) == expected


@pytest.mark.parametrize("value", ["tau", True, [1.0], {"type": "fourier"}])
def test_profile_should_reject_other_forms(value) -> None:
    with pytest.raises((TypeError, ValueError)):
        BaseProfile.validate(value)


def test_harmonic_profile_values() -> None:
    profile = Harmonic(base=1.0, amplitude=0.5, direction=[0, 0, 2], power=2)
    assert profile(K) == pytest.approx(1.5)
    assert profile(I) == pytest.approx(1.0)
    assert profile.to_spec()["direction"] == [0.0, 0.0, 1.0]
