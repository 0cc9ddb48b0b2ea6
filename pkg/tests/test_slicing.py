from typing import Literal

import numpy as np
import pytest

from slicepl import kernels
from slicepl.domains import Ball
from slicepl.errors import FunctionDomainError, InputError, PropositionError
from slicepl.functions import Exp, Identity, PowerSeries, PrincipalLog, QuatConstant
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import I, J, K, Quaternion, UnitImaginary
from slicepl.slicing import (
    check_residual,
    coincide_on_slice,
    compose,
    cr_residual,
    default_slice_samples,
    is_slice_preserving,
    join_values,
    max_modulus_grid_check,
    orthogonal_unit,
    product,
    recover_coefficients,
    split,
    split_values,
)

i, j, k = I.as_quaternion(), J.as_quaternion(), K.as_quaternion()


class Conjugate(BaseFunction):
    """ q ↦ q̄, which is not slice regular. """

    type: Literal["conjugate"] = "conjugate"

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qconj(q)

    def structurally_slice_preserving(self) -> bool:
        return False


def _random_units(rng: np.random.Generator, n: int):
    return [UnitImaginary.normalized(v) for v in rng.normal(size=(n, 3))]


def test_orthogonal_unit() -> None:
    assert orthogonal_unit(I) == J
    axis = UnitImaginary.normalized([1.0, 2.0, -0.5])
    assert abs(axis.dot(orthogonal_unit(axis))) <= 1e-15


def test_split_should_read_values_along_the_splitting_basis() -> None:
    f = PowerSeries(coeffs=[0, j])
    pair = split(f, I, J, 1 + 1j)
    assert pair.F == pytest.approx((0.0, 0.0), abs=1e-15)
    assert pair.G == pytest.approx((1.0, 1.0), abs=1e-15)
    assert pair.reconstruct() == j + k


def test_split_of_slice_preserving_function_should_have_no_second_part() -> None:
    pair = split(Exp(), I, J, 0.5 + 2j)
    assert pair.G == (0.0, 0.0)
    assert pair.first == Exp()(I.point(0.5, 2.0))


def test_split_should_reject_non_orthogonal_units() -> None:
    with pytest.raises(InputError):
        split(Exp(), I, UnitImaginary.normalized([1.0, 1.0, 0.0]), 1j)


def test_split_should_reject_points_off_the_slice() -> None:
    with pytest.raises(InputError):
        split(Exp(), I, J, Quaternion(w=1, y=1))


def test_split_should_raise_outside_the_domain() -> None:
    with pytest.raises(FunctionDomainError):
        split(PrincipalLog(), I, J, -2.0)


def _random_orthogonal_unit(rng: np.random.Generator, axis: UnitImaginary) -> UnitImaginary:
    v = rng.normal(size=3)
    return UnitImaginary.normalized(v - (v @ axis.vector) * axis.vector)


def test_split_should_recompose_random_power_series(rng: np.random.Generator) -> None:
    for _ in range(1000):
        degree = int(rng.integers(0, 9))
        f = PowerSeries(coeffs=rng.uniform(-1, 1, size=(degree + 1, 4)).tolist())
        axis = UnitImaginary.normalized(rng.normal(size=3))
        other = _random_orthogonal_unit(rng, axis)
        x, y = rng.uniform(-0.7, 0.7, size=(2, 100))
        values = f.evaluate(kernels.slice_points(x, y, axis.vector))
        first, second = split_values(values, axis, other)
        assert np.all(kernels.qabs(join_values(first, second, axis, other) - values) <= 1e-11)

        pair = split(f, axis, other, complex(x[0], y[0]))
        error = pair.reconstruct().array - f(axis.point(x[0], y[0])).array
        assert float(kernels.qabs(error)) <= 1e-11


def test_residual_of_power_series_should_vanish(rng: np.random.Generator) -> None:
    f = PowerSeries(coeffs=rng.uniform(-1, 1, size=(8, 4)).tolist(), tail_ratio=0.5)
    for axis in _random_units(rng, 20):
        z = complex(*rng.uniform(-0.8, 0.8, size=2))
        assert cr_residual(f, axis, z, h=1e-4) <= 1e-6


@pytest.mark.parametrize("z", [0.5 + 0.5j, 2.0 - 1.0j, -1.0 + 0.1j])
def test_residual_of_log_should_vanish(z: complex) -> None:
    check = check_residual(PrincipalLog(), UnitImaginary.normalized([0.2, -0.4, 0.9]), z)
    assert check.regular
    assert check.residual <= 1e-6


def test_residual_should_shrink_quadratically() -> None:
    check = check_residual(PrincipalLog(), I, 0.3 + 0.4j, h=1e-4)
    assert check.ratio >= 50, "a tenth of the step should cut the residual about a hundredfold"


def test_residual_of_conjugate_should_be_one(rng: np.random.Generator) -> None:
    f = Conjugate()
    for axis in _random_units(rng, 10):
        check = check_residual(f, axis, complex(*rng.uniform(-2, 2, size=2)))
        assert check.residual == pytest.approx(1.0, abs=1e-3)
        assert not check.regular


def test_residual_should_reject_bad_steps() -> None:
    with pytest.raises(InputError):
        cr_residual(Exp(), I, 1j, h=0.0)


def test_residual_stencil_should_stay_in_domain() -> None:
    with pytest.raises(FunctionDomainError) as exc_info:
        cr_residual(PrincipalLog(), I, -1.0, h=1e-4)
    assert exc_info.value.node.type == "log"


def test_is_slice_preserving_should_accept_log() -> None:
    check = is_slice_preserving(PrincipalLog(), default_slice_samples())
    assert check.verdict
    assert check.structural
    assert check.samples == 48
    assert not check.witnesses


def test_is_slice_preserving_should_find_a_witness() -> None:
    f = PowerSeries(coeffs=[0, j])
    check = is_slice_preserving(f, [(I, 0.5 + 0.5j), (J, 0.5 + 0.5j)])
    assert not check.verdict
    assert not check.structural
    assert check.witnesses == [I.point(0.5, 0.5)], "q·j stays in L_j but leaves L_i"


def test_product_and_compose_helpers() -> None:
    f = product(Exp(), PowerSeries(coeffs=[i]))
    assert f(0.0) == i
    g = compose(PowerSeries(coeffs=[0, j]), Exp())
    assert g(0.0) == j
    with pytest.raises(PropositionError):
        product(QuatConstant(c=k), Identity())
    with pytest.raises(PropositionError):
        compose(Exp(), QuatConstant(c=k))


def test_recover_coefficients_should_invert_power_series(rng: np.random.Generator) -> None:
    coeffs = rng.uniform(-1, 1, size=(5, 4))
    f = PowerSeries(coeffs=coeffs.tolist())
    for axis in [I, UnitImaginary.normalized([0.3, -0.3, 0.9])]:
        recovered = recover_coefficients(f, axis, degree=4)
        assert len(recovered) == 5
        for found, expected in zip(recovered, coeffs):
            assert np.max(np.abs(found.array - expected)) <= 1e-10


def test_functions_agreeing_on_one_slice_should_agree_everywhere(rng: np.random.Generator) -> None:
    f = PowerSeries(coeffs=rng.uniform(-1, 1, size=(4, 4)).tolist())
    g = PowerSeries(coeffs=recover_coefficients(f, J, degree=3))
    points = [complex(*z) for z in rng.uniform(-1, 1, size=(10, 2))]
    assert coincide_on_slice(f, g, J, points, tolerance=1e-10)
    for axis in _random_units(rng, 5):
        assert coincide_on_slice(f, g, axis, points, tolerance=1e-10)
    assert not coincide_on_slice(f, Exp(), J, points)


def test_max_modulus_should_hold_for_random_polynomials(rng: np.random.Generator) -> None:
    ball = Ball(radius=1.0)
    for _ in range(100):
        degree = int(rng.integers(0, 6))
        f = PowerSeries(coeffs=rng.uniform(-1, 1, size=(degree + 1, 4)).tolist())
        check = max_modulus_grid_check(f, ball)
        assert check.holds(1e-6), f"interior maximum {check.interior_max} exceeds {check.boundary_max} for {f}"


def test_max_modulus_should_fail_for_non_regular_function() -> None:
    f = PowerSeries(coeffs=[1.0])
    g = BaseFunction.validate({"type": "sum", "terms": [f.to_spec(), {"type": "negate", "arg": {"type": "identity"}}]})
    assert max_modulus_grid_check(g, Ball(radius=1.0)).holds()

    # 1 − |q|² peaks at the centre
    class Bump(Conjugate):
        def evaluate(self, q: np.ndarray) -> np.ndarray:
            return kernels.real(1.0 - kernels.qabs(q) ** 2)

    check = max_modulus_grid_check(Bump(), Ball(radius=1.0))
    assert not check.holds()
    assert check.interior_max == pytest.approx(1.0)
    assert check.argmax == Quaternion()
