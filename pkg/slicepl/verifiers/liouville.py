from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger

from slicepl import kernels
from slicepl.config import Config
from slicepl.domains.whole import WholeSpace
from slicepl.errors import InputError
from slicepl.growth import estimate_order, estimate_type
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import Quaternion, UnitImaginary
from slicepl.slicing import orthogonal_unit, split_values
from slicepl.utils.sphere import spiral_grid

from .report import Premise, PremiseStatus, VerificationReport
from .sampling import (
    Region,
    ShellSamples,
    boundedness_premise,
    conclude,
    fit_margin,
    log_bound_constant,
    premise_status,
    region_grid,
    verification_radii,
)

THEOREM = "liouville"

Line = Tuple[Sequence[float], Sequence[float]]


def line_samples(f: BaseFunction, axis: UnitImaginary, line: Line, config: Config) -> ShellSamples:
    """
    ln|f| at p ± t·d on the line of L_I through p = x + yI with direction d, for n_theta geometric distances t
    from shell_min to shell_max. Each distance is one "shell" of two points.
    """
    (px, py), (dx, dy) = line
    norm = float(np.hypot(dx, dy))
    if norm == 0:
        raise InputError("line direction must be nonzero")
    dx, dy = dx / norm, dy / norm
    t = np.geomspace(config.shell_min, config.shell_max, config.n_theta)
    signed = np.stack([t, -t], axis=-1)
    grid = kernels.slice_points(px + signed * dx, py + signed * dy, axis.vector)
    with np.errstate(all="ignore"):
        log_m = f.log_modulus(grid)
    return ShellSamples(
        region=Region.LINE,
        radii=t,
        grids=[g[None, :, :] for g in grid],
        log_m=[v[None, :] for v in log_m],
    )


def deviation_samples(
    f: BaseFunction, radii: Sequence[float], value_at_zero: np.ndarray, config: Config
) -> ShellSamples:
    """ ln|f(q) − f(0)| over full spheres of ℍ. """
    domain = WholeSpace()
    axes = spiral_grid(config.n_axis)
    grids, log_dev = [], []
    for r in radii:
        grid = region_grid(domain, Region.CLOSURE, float(r), config, axes)
        with np.errstate(all="ignore"):
            log_dev.append(kernels.log_abs(f.evaluate(grid) - value_at_zero))
        grids.append(grid)
    return ShellSamples(region=Region.CLOSURE, radii=np.asarray(radii, dtype=float), grids=grids, log_m=log_dev)


def split_deviations(
    f: BaseFunction, axis: UnitImaginary, line_grid: np.ndarray, value_at_zero: np.ndarray
) -> Dict[str, float]:
    """ Largest deviations of the splitting components F and G of f_I from their values at 0, along the line. """
    other = orthogonal_unit(axis)
    with np.errstate(all="ignore"):
        first, second = split_values(f.evaluate(line_grid), axis, other)
    first_0, second_0 = split_values(value_at_zero, axis, other)
    return {
        "split_F_deviation": float(np.nanmax(np.abs(first - first_0))),
        "split_G_deviation": float(np.nanmax(np.abs(second - second_0))),
    }


def growth_premises(f: BaseFunction, config: Config) -> List[Premise]:
    """
    Order at most 1 and, at order 1, type 0. Below order 1 the type for ρ = 1 is 0 and is not estimated.
    """
    order = estimate_order(f, WholeSpace(), config=config)
    stderr = order.fit_diagnostics.stderr if order.fit_diagnostics is not None else 0.0
    order_margin = fit_margin(stderr, config)
    premises = [
        Premise(
            name="order",
            status=premise_status(order.order_est <= 1 + order_margin),
            evidence={"order_est": order.order_est, "margin": order_margin, "degenerate": order.degenerate},
        )
    ]
    if order.order_est < 1 - order_margin:
        evidence = {"note": "order below 1, so the type for order 1 is 0"}
        premises.append(Premise(name="type", status=PremiseStatus.FALSIFIABLE_ONLY_PASS, evidence=evidence))
        return premises
    estimate = estimate_type(f, WholeSpace(), 1.0, config=config)
    type_margin = fit_margin(
        estimate.fit_diagnostics.stderr if estimate.fit_diagnostics is not None else 0.0, config
    )
    premises.append(
        Premise(
            name="type",
            status=premise_status(estimate.type_est <= type_margin),
            evidence={"type_est": estimate.type_est, "margin": type_margin, "trend": estimate.trend},
        )
    )
    return premises


def verify_liouville(
    f: BaseFunction,
    axis: UnitImaginary,
    line: Line = ((0.0, 0.0), (1.0, 0.0)),
    config: Config = Config(),
) -> VerificationReport:
    """
    Checks that an entire f of order at most 1 and type 0, bounded on a line of the slice L_I, is constant.

    The line is given by a point (x, y) and a direction (dx, dy) in the coordinates x + yI of L_I. Constancy is
    tested as |f(q) − f(0)| ≤ tol·max(1, |f(0)|) over spheres of ℍ; witnesses then carry |f(q) − f(0)| as their
    modulus and the tolerance as their bound.

    :raises InputError: If some node of f is not defined on all of ℍ, or the line direction is zero.
    """
    if not f.entire:
        raise InputError(f"{f} is not entire: it contains logarithms, inverses or non-integer powers")
    axis = UnitImaginary.coerce(axis)
    logger.info(f"verifying the Liouville principle for {f} on the slice of {axis.vector}")

    line_values = line_samples(f, axis, line, config)
    premises = growth_premises(f, config)
    premises.append(boundedness_premise(line_values, None, config, name="bounded on line"))

    value_at_zero = f.evaluate(np.zeros(4))
    tol = config.tolerance_for(not f.truncated)
    radii, clipped_at = verification_radii(f, WholeSpace(), config)
    deviations = deviation_samples(f, radii, value_at_zero, config)
    scale = max(1.0, float(kernels.qabs(value_at_zero)))
    evidence: Dict[str, Any] = {"value_at_zero": Quaternion.from_array(value_at_zero), "deviation_tol": tol}
    evidence.update(split_deviations(f, axis, np.concatenate(line_values.grids, axis=1)[0], value_at_zero))
    parameters: Dict[str, Any] = {
        "function": str(f),
        "axis": axis.as_quaternion(),
        "line_point": tuple(float(v) for v in line[0]),
        "line_direction": tuple(float(v) for v in line[1]),
    }
    return conclude(
        THEOREM,
        premises,
        deviations,
        log_bound_constant(tol * scale),
        0.0,
        config,
        parameters,
        clipped_at=clipped_at,
        overflow=line_values.overflow,
        evidence=evidence,
    )
