import os

import numpy as np
import pytest
from pydantic import ValidationError

from slicepl import kernels
from slicepl.domains import Ball, WholeSpace
from slicepl.models.quaternion import Quaternion
from slicepl.specs import load_domain
from slicepl.utils.sphere import spiral_grid


@pytest.mark.parametrize(
    "q, expected",
    [
        (0.5, True),
        (Quaternion(x=0.99), True),
        (Quaternion(w=0.5, y=0.5, z=0.5), True),
        (1.0, False),
        (Quaternion(w=-0.8, z=0.7), False),
    ],
)
def test_unit_ball_membership(domains: str, q, expected: bool) -> None:
    ball = load_domain(os.path.join(domains, "unit_ball.json"))
    assert ball.bounded
    assert ball.slice_hypothesis
    assert ball.contains(q) == expected


def test_off_axis_ball() -> None:
    ball = Ball(center=[0, 1, 0, 0], radius=0.5)
    assert ball.contains(Quaternion(x=1.2))
    assert not ball.contains(0.0)
    assert ball.slice_hypothesis is None
    points = ball.boundary_sample(1.0, n_theta=11, n_axis=8)
    assert len(points) == 8
    assert np.allclose(kernels.qabs(points), 1.0, rtol=1e-14, atol=0)
    assert np.allclose(kernels.qabs(points - ball.center.array), 0.5, rtol=1e-12, atol=0)


def test_centred_ball_grids() -> None:
    ball = Ball(radius=2.0)
    axes = spiral_grid(8)
    assert np.isnan(ball.shell_grid(3.0, 11, axes)).all(), "shells outside the ball should be empty"
    assert np.allclose(kernels.qabs(ball.boundary_sample(2.0, 11, 8)), 2.0)
    assert ball.boundary_sample(1.0, 11, 8).shape == (0, 4)
    inner = ball.near_boundary_grid(2.0, 11, axes, offset=1e-6).reshape(-1, 4)
    assert np.all(ball.contains_points(inner))


def test_ball_should_reject_nonpositive_radius() -> None:
    with pytest.raises(ValidationError):
        Ball(radius=0.0)


def test_whole_space_has_no_boundary(domains: str) -> None:
    whole = load_domain(os.path.join(domains, "whole.json"))
    assert isinstance(whole, WholeSpace)
    assert whole.contains(Quaternion(w=-1e6, x=3.0))
    assert whole.boundary_sample(5.0, 11, 8).shape == (0, 4)
    assert whole.shell_grid(5.0, 11, spiral_grid(4)).shape == (4, 11, 4)
