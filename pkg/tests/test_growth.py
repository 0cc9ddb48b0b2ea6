import os
from typing import List

import numpy as np
import pytest

from slicepl.config import Config
from slicepl.domains import Ball, CircularCone, StripDomain, WholeSpace
from slicepl.errors import EmptyIntersectionError, InputError
from slicepl.functions import Exp, Identity, RealConstant, RightScale
from slicepl.growth import (
    LOG_FLOAT_MAX,
    SWEEP_COLUMNS,
    clip_radii,
    default_radii,
    double_log_plus,
    estimate_order,
    estimate_type,
    log_plus,
    max_modulus,
    overflow_radius,
    shell_maximum,
    sweep,
)
from slicepl.specs import load_function
from slicepl.utils.sphere import spiral_grid

CONE = CircularCone(phi=np.pi / 2)


@pytest.fixture(scope="function")
def config() -> Config:
    return Config(n_theta=21, n_axis=8)


def test_log_plus_helpers() -> None:
    assert list(log_plus([-1.0, 0.0, 2.0])) == [0.0, 0.0, 2.0]
    assert double_log_plus([-5.0, 0.5, np.e]) == pytest.approx([0.0, 0.0, 1.0], abs=1e-15)


def test_max_modulus_of_exp_on_a_cone() -> None:
    assert max_modulus(Exp(), CONE, 2.0) == pytest.approx(np.exp(2.0), rel=1e-12)
    m = shell_maximum(Exp(), CONE, 2.0, n_theta=21, n_axis=8)
    assert m.log_value == 2.0
    assert m.refinement_delta == 0.0, "the real point is on both grids"
    assert m.witness.is_real
    assert m.samples == 8 * 21 + 16 * 41


def test_max_modulus_should_never_decrease_with_density(functions: str) -> None:
    f = load_function(os.path.join(functions, "quintic.json"))
    m = shell_maximum(f, StripDomain(gamma=2.0), 3.0, n_theta=11, n_axis=4)
    assert m.log_value >= m.coarse_log_value
    assert m.refinement_delta >= 0


def test_shell_maximum_should_reject_bad_radii() -> None:
    with pytest.raises(InputError):
        shell_maximum(Exp(), CONE, 0.0)
    with pytest.raises(EmptyIntersectionError) as exc_info:
        shell_maximum(Exp(), Ball(radius=1.0), 2.0)
    assert exc_info.value.radius == 2.0


def test_overflow_radius_of_exp(config: Config) -> None:
    axes = spiral_grid(config.n_axis)
    r = overflow_radius(Exp(), CONE, 1024.0, config.n_theta, axes)
    assert r == pytest.approx(LOG_FLOAT_MAX, rel=1e-5)
    assert overflow_radius(Exp(), CONE, 512.0, config.n_theta, axes) is None


def test_clip_radii_should_stop_below_half_the_overflow_radius(config: Config) -> None:
    axes = spiral_grid(config.n_axis)
    radii = [10.0, 100.0, 300.0, 400.0, 1000.0]
    kept, clip = clip_radii(Exp(), CONE, radii, config.n_theta, axes)
    assert list(kept) == [10.0, 100.0, 300.0]
    assert clip == pytest.approx(LOG_FLOAT_MAX, rel=1e-5)


def test_default_radii_should_keep_their_ratio_when_clipped(config: Config) -> None:
    f = Exp(arg=RightScale(c=100.0, arg=Identity()))
    radii, clip = default_radii(f, CONE, config, spiral_grid(config.n_axis))
    assert clip == pytest.approx(LOG_FLOAT_MAX / 100, rel=1e-5)
    assert radii[-1] == pytest.approx(clip / 2)
    assert radii[-1] / radii[0] == pytest.approx(config.r_max / config.r_min)
    assert len(radii) == config.n_r


def test_order_of_exp_on_a_cone(functions: str, config: Config) -> None:
    estimate = estimate_order(load_function(os.path.join(functions, "exp.json")), CONE, config=config)
    assert 0.95 <= estimate.order_est <= 1.05
    assert estimate.clipped_at == pytest.approx(LOG_FLOAT_MAX, rel=1e-5)
    assert max(estimate.r_grid) <= estimate.clipped_at / 2
    assert not estimate.degenerate


def test_order_of_polynomial_should_be_zero(functions: str, config: Config) -> None:
    estimate = estimate_order(load_function(os.path.join(functions, "quintic.json")), WholeSpace(), config=config)
    assert estimate.order_est <= 0.05
    assert estimate.clipped_at is None
    assert estimate.fit_diagnostics.regressors == ["ln r", "ln ln r", "1"], "polynomial growth goes to ln ln r"


def test_order_of_exp_square(functions: str, config: Config) -> None:
    estimate = estimate_order(load_function(os.path.join(functions, "exp_square.json")), WholeSpace(), config=config)
    assert 1.9 <= estimate.order_est <= 2.1
    assert estimate.fit_diagnostics.regressors == ["ln r", "1"]


def test_type_of_exp(config: Config) -> None:
    estimate = estimate_type(Exp(), CONE, rho=1.0, config=config)
    assert 0.9 <= estimate.type_est <= 1.1
    assert estimate.rho == 1.0


def test_type_of_scaled_exp(config: Config) -> None:
    f = Exp(arg=RightScale(c=3.0, arg=Identity()))
    estimate = estimate_type(f, CONE, rho=1.0, config=config)
    assert estimate.type_est == pytest.approx(3.0, rel=1e-2)
    assert estimate.trend == pytest.approx(0.0, abs=1e-6)


def test_type_should_need_positive_order() -> None:
    with pytest.raises(InputError):
        estimate_type(Exp(), CONE, rho=0.0)


def test_small_functions_should_be_degenerate(config: Config) -> None:
    f = RealConstant(t=0.5)
    order = estimate_order(f, WholeSpace(), config=config)
    assert order.degenerate
    assert order.order_est == 0.0
    kind = estimate_type(f, WholeSpace(), rho=1.0, config=config)
    assert kind.degenerate
    assert kind.type_est == 0.0


def test_growth_on_strips_should_be_non_canonical(config: Config) -> None:
    estimate = estimate_order(Exp(), StripDomain(gamma=2.0), r_grid=np.geomspace(2.0, 64.0, 8), config=config)
    assert estimate.non_canonical
    assert "non-canonical" in estimate.render()


@pytest.mark.parametrize("r_grid", [[], [1.0, 1.0, 2.0], [-1.0, 2.0], [[1.0, 2.0]]])
def test_sweep_should_reject_bad_grids(r_grid: List[float], config: Config) -> None:
    with pytest.raises(InputError):
        sweep(Exp(), CONE, r_grid, config)


def test_sweep_rows(config: Config) -> None:
    estimate = estimate_order(Exp(), CONE, r_grid=np.geomspace(2.0, 256.0, 8), config=config)
    rows = estimate.sweep_rows()
    assert len(rows) == 8
    assert all(list(row) == SWEEP_COLUMNS for row in rows)
    assert sum(row["envelope_flag"] for row in rows) == len(estimate.envelope_points)
    assert rows[-1]["M_f"] == pytest.approx(np.exp(256.0), rel=1e-12)
    assert rows[-1]["lnp_lnp_M_over_ln_r"] == pytest.approx(1.0, rel=1e-12)


def test_sweep_should_report_progress(config: Config) -> None:
    progress: List[float] = []
    sweep(Exp(), CONE, [1.0, 2.0, 4.0, 8.0], config, on_progress=progress.append)
    assert progress == [0.25, 0.5, 0.75, 1.0]


def test_sweep_should_survive_a_failing_progress_callback(config: Config) -> None:
    calls: List[float] = []

    def on_progress(progress: float) -> None:
        calls.append(progress)
        raise RuntimeError("closed")

    _, maxima, _, _ = sweep(Exp(), CONE, [1.0, 2.0, 4.0], config, on_progress=on_progress)
    assert len(maxima) == 3
    assert calls == [1 / 3]


def test_sweep_should_not_depend_on_worker_count(config: Config) -> None:
    f = Exp(arg=RightScale(c=0.5, arg=Identity()))
    single = estimate_order(f, CONE, config=config)
    pooled = estimate_order(f, CONE, config=config.merge(workers=4))
    assert single.log_m_values == pooled.log_m_values
    assert single.order_est == pooled.order_est
