import numpy as np
import pytest
from pydantic import ValidationError

from slicepl import kernels, quaternion
from slicepl.errors import QuaternionDomainError
from slicepl.models.quaternion import I, J, K, PolarForm, Quaternion, UnitImaginary

ONE = Quaternion.real(1)
i, j, k = I.as_quaternion(), J.as_quaternion(), K.as_quaternion()


def _close(p: Quaternion, q: Quaternion, tol: float = 1e-12) -> bool:
    return (p - q).modulus() <= tol * max(1.0, q.modulus())


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (i, j, k),
        (j, k, i),
        (k, i, j),
        (j, i, -k),
        (ONE, Quaternion(w=1, x=2, y=3, z=4), Quaternion(w=1, x=2, y=3, z=4)),
        (i + j, i - j, Quaternion(z=-2)),
    ],
)
def test_mul_should_follow_hamilton_table(p: Quaternion, q: Quaternion, expected: Quaternion) -> None:
    assert quaternion.mul(p, q) == expected


@pytest.mark.parametrize(
    "q, expected",
    [
        (Quaternion.real(2), Quaternion.real(0.5)),
        (i, -i),
        (Quaternion(w=1, x=1, y=1, z=1), Quaternion(w=0.25, x=-0.25, y=-0.25, z=-0.25)),
    ],
)
def test_inverse(q: Quaternion, expected: Quaternion) -> None:
    inv = quaternion.inverse(q)
    assert _close(inv, expected)
    assert _close(q * inv, ONE)


def test_inverse_of_zero_should_raise() -> None:
    with pytest.raises(QuaternionDomainError) as exc_info:
        quaternion.inverse(0)
    assert exc_info.value.excluded == "{0}"


def test_polar_of_non_real_quaternion() -> None:
    form = quaternion.polar(Quaternion(w=1, x=1))
    assert form.r == pytest.approx(np.sqrt(2), rel=1e-15)
    assert form.theta == pytest.approx(np.pi / 4, rel=1e-15)
    assert form.axis == I
    assert not form.real_axis


@pytest.mark.parametrize("t, theta", [(5.0, 0.0), (-3.0, np.pi), (0.0, 0.0)])
def test_polar_of_real_quaternion_should_set_real_axis_flag(t: float, theta: float) -> None:
    form = quaternion.polar(t)
    assert form.real_axis
    assert form.axis is None
    assert form.r == abs(t)
    assert form.theta == theta


def test_polar_form_should_reject_boundary_angle_without_flag() -> None:
    with pytest.raises(ValidationError):
        PolarForm(r=1.0, axis=I, theta=0.0)


def test_polar_should_reconstruct_random_quaternions(rng: np.random.Generator) -> None:
    for q in rng.uniform(-10, 10, size=(500, 4)):
        q = Quaternion.from_array(q)
        form = quaternion.polar(q)
        assert _close(form.reconstruct(), q, 1e-10)
        assert _close(quaternion.from_polar(form.r, form.theta, form.axis), q, 1e-10)


@pytest.mark.parametrize(
    "q, expected",
    [
        (Quaternion.real(np.e), Quaternion.real(1.0)),
        (i, Quaternion(x=np.pi / 2)),
        (Quaternion(w=1, x=1), Quaternion(w=np.log(2) / 2, x=np.pi / 4)),
    ],
)
def test_principal_log(q: Quaternion, expected: Quaternion) -> None:
    assert _close(quaternion.principal_log(q), expected)


@pytest.mark.parametrize("q", [-1.0, 0.0, -1e-300])
def test_principal_log_should_raise_on_negative_half_line(q: float) -> None:
    with pytest.raises(QuaternionDomainError) as exc_info:
        quaternion.principal_log(q)
    assert exc_info.value.excluded == quaternion.NEGATIVE_HALF_LINE
    assert "(-inf, 0]" in str(exc_info.value)


@pytest.mark.parametrize(
    "q, expected",
    [
        (i, Quaternion(x=-np.pi / 2)),
        (Quaternion.real(-2), Quaternion.real(np.log(2))),
        (j * 2, Quaternion(w=np.log(2), y=-np.pi / 2)),
    ],
)
def test_branch_log(q: Quaternion, expected: Quaternion) -> None:
    assert _close(quaternion.branch_log(q), expected)


@pytest.mark.parametrize("q", [3.0, 0.0])
def test_branch_log_should_raise_on_positive_half_line(q: float) -> None:
    with pytest.raises(QuaternionDomainError) as exc_info:
        quaternion.branch_log(q)
    assert exc_info.value.excluded == quaternion.POSITIVE_HALF_LINE


@pytest.mark.parametrize(
    "q, gamma, expected",
    [
        (Quaternion.real(4), 0.5, Quaternion.real(2)),
        (i, 2.0, Quaternion.real(-1)),
        (Quaternion(w=1, x=1), 2.0, Quaternion(x=2)),
    ],
)
def test_qpow(q: Quaternion, gamma: float, expected: Quaternion) -> None:
    assert _close(quaternion.qpow(q, gamma), expected)


def test_qpow_should_map_polar_form(rng: np.random.Generator) -> None:
    axis = UnitImaginary.normalized(rng.normal(size=3))
    for r, theta, gamma in zip(rng.uniform(0.1, 5, 50), rng.uniform(0, 3, 50), rng.uniform(-2, 2, 50)):
        q = quaternion.from_polar(r, theta, axis)
        expected = quaternion.from_polar(r ** gamma, gamma * theta, axis)
        assert _close(quaternion.qpow(q, gamma), expected, 1e-10)


def test_qpow_should_raise_on_cut() -> None:
    with pytest.raises(QuaternionDomainError):
        quaternion.qpow(-4, 0.5)


@pytest.mark.parametrize(
    "q, expected",
    [
        (Quaternion(), ONE),
        (Quaternion(x=np.pi), Quaternion.real(-1)),
        (Quaternion(w=1, y=np.pi / 2), Quaternion(y=np.e)),
    ],
)
def test_qexp(q: Quaternion, expected: Quaternion) -> None:
    assert _close(quaternion.qexp(q), expected)


def test_qexp_modulus_should_be_exp_of_real_part(rng: np.random.Generator) -> None:
    q = rng.uniform(-10, 10, size=(1000, 4))
    assert np.allclose(kernels.qabs(kernels.qexp(q)), np.exp(q[:, 0]), rtol=1e-12, atol=0)


def test_algebra_properties_on_random_triples(rng: np.random.Generator) -> None:
    p, q, s = (rng.uniform(-10, 10, size=(100_000, 4)) for _ in range(3))
    tol = 1e-12
    abs_p, abs_q, abs_s = kernels.qabs(p), kernels.qabs(q), kernels.qabs(s)
    pq = kernels.qmul(p, q)

    # |pq| = |p||q|
    assert np.all(np.abs(kernels.qabs(pq) - abs_p * abs_q) <= tol * abs_p * abs_q)

    # (pq)s = p(qs)
    defect = kernels.qabs(kernels.qmul(pq, s) - kernels.qmul(p, kernels.qmul(q, s)))
    assert np.all(defect <= tol * abs_p * abs_q * abs_s)

    # conj(pq) = conj(q) conj(p)
    defect = kernels.qabs(kernels.qconj(pq) - kernels.qmul(kernels.qconj(q), kernels.qconj(p)))
    assert np.all(defect <= tol * abs_p * abs_q)

    # q q⁻¹ = q⁻¹ q = 1
    inv = kernels.qinv(q)
    assert np.all(kernels.qabs(kernels.qmul(q, inv) - kernels.ONE) <= tol)
    assert np.all(kernels.qabs(kernels.qmul(inv, q) - kernels.ONE) <= tol)

    # q q̄ = |q|²
    norm = kernels.qmul(q, kernels.qconj(q))
    assert np.all(np.abs(norm[:, 0] - abs_q ** 2) <= tol * abs_q ** 2)
    assert np.all(np.abs(norm[:, 1:]) <= tol * abs_q[:, None] ** 2)


def test_log_exp_roundtrip_and_unit_powers(rng: np.random.Generator) -> None:
    q = rng.uniform(-10, 10, size=(10_000, 4))
    assert np.all(kernels.principal_log_mask(q))
    abs_q = kernels.qabs(q)
    assert np.all(kernels.qabs(kernels.qexp(kernels.qlog(q)) - q) <= 1e-10 * abs_q)
    assert np.all(kernels.qabs(kernels.qpow(q, 1.0) - q) <= 1e-12 * abs_q)
    assert np.all(kernels.qabs(kernels.qpow(q, 0.0) - kernels.ONE) <= 1e-12)


def test_kernels_should_return_nan_rows_off_domain() -> None:
    q = np.array([[1.0, 0, 0, 0], [-1.0, 0, 0, 0], [0.0, 0, 0, 0]])
    log = kernels.qlog(q)
    assert not np.isnan(log[0]).any()
    assert np.isnan(log[1:]).all()
    assert np.isnan(kernels.qinv(q)[2]).all()


@pytest.mark.parametrize("text", ["1,2,3,4", "[1, 2, 3, 4]", " 1 ,2,3, 4 "])
def test_quaternion_should_parse_command_line_form(text: str) -> None:
    assert Quaternion.from_string(text) == Quaternion(w=1, x=2, y=3, z=4)


@pytest.mark.parametrize("text", ["1,2,3", "a,b,c,d"])
def test_quaternion_should_reject_malformed_strings(text: str) -> None:
    with pytest.raises(ValueError):
        Quaternion.from_string(text)


def test_quaternion_format_should_use_17_significant_digits() -> None:
    assert Quaternion(w=0.1, z=-1).format() == "[0.10000000000000001, 0, 0, -1]"


def test_quaternion_value_api() -> None:
    q = Quaternion(w=1, x=-2, y=2, z=4)
    assert q.re == 1
    assert q.im == Quaternion(x=-2, y=2, z=4)
    assert q.conjugate() == Quaternion(w=1, x=2, y=-2, z=-4)
    assert q.modulus() == 5.0
    assert abs(q) == 5.0
    assert -q + q == Quaternion()
    assert q * 2 == Quaternion(w=2, x=-4, y=4, z=8)
    assert 2 * q == q * 2
    assert Quaternion.coerce([1, -2, 2, 4]) == q
    assert Quaternion.coerce({"w": 1, "x": -2, "y": 2, "z": 4}) == q


def test_unit_imaginary_should_validate_length() -> None:
    with pytest.raises(ValidationError):
        UnitImaginary(x=1.0, y=1.0, z=0.0)
    unit = UnitImaginary.coerce("0,3,4,0")
    assert unit.vector == pytest.approx([0.6, 0.8, 0.0], abs=1e-16)
    assert unit.point(1.0, 2.0) == Quaternion(w=1.0, x=1.2, y=1.6)
    square = unit.as_quaternion() * unit.as_quaternion()
    assert _close(square, Quaternion.real(-1))
