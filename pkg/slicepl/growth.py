"""
Growth of a function on an unbounded domain: the maximum modulus M_f(r, Ω) over the closure of Ω on the sphere
|q| = r, and least-squares estimates of the order

    ρ = limsup ln⁺ ln⁺ M_f(r, Ω) / ln r

and, for a given order ρ, the type

    σ = limsup ln⁺ M_f(r, Ω) / r^ρ.

All maxima are taken in log space, so M_f itself only overflows where ln M_f exceeds `LOG_FLOAT_MAX`. Sweeps stop
short of that radius and report where they were clipped.
"""
from math import ceil
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.optimize import bisect

from slicepl.config import Config
from slicepl.domains.strip import StripDomain
from slicepl.errors import EmptyIntersectionError, InputError
from slicepl.models.domain import BaseDomain
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import Quaternion
from slicepl.utils.parallel import ordered_map
from slicepl.utils.progress import ProgressCallback, SweepProgress, progress_noop
from slicepl.utils.sphere import spiral_grid

LOG_FLOAT_MAX = float(np.log(np.finfo(float).max))
MIN_RADIUS = 1e-6

SWEEP_COLUMNS = ["r", "M_f", "lnp_lnp_M_over_ln_r", "envelope_flag"]


def log_plus(log_m: np.ndarray) -> np.ndarray:
    """ ln⁺ M = max(ln M, 0), given ln M. """
    return np.maximum(np.asarray(log_m, dtype=float), 0.0)


def double_log_plus(log_m: np.ndarray) -> np.ndarray:
    """ ln⁺ ln⁺ M, given ln M. """
    with np.errstate(divide="ignore"):
        return np.maximum(np.log(log_plus(log_m)), 0.0)


def shell_log_moduli(
    f: BaseFunction,
    domain: BaseDomain,
    r: float,
    n_theta: int,
    axes: np.ndarray,
    closed: bool = True,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Samples ln|f| on the shell of radius r of Ω.

    Returns the (n_axis, m, 4) grid and the (n_axis, m) log moduli, NaN wherever the grid has no point or f is
    undefined.
    """
    grid = domain.shell_grid(r, n_theta, axes, closed=closed)
    return grid, grid_log_moduli(f, grid)


def grid_log_moduli(f: BaseFunction, grid: np.ndarray) -> np.ndarray:
    """ ln|f| over a grid of quaternions, NaN at the grid's missing points. """
    log_m = np.full(grid.shape[:-1], np.nan)
    present = ~np.isnan(grid).any(axis=-1)
    with np.errstate(all="ignore"):
        log_m[present] = f.log_modulus(grid[present])
    return log_m


def grid_argmax(log_m: np.ndarray) -> Optional[Tuple[int, ...]]:
    """
    Index of the largest value, NaN ignored. Ties go to the first index in C order, i.e. the lowest axis index and
    then the lowest angle index.
    """
    if np.isnan(log_m).all():
        return None
    return np.unravel_index(int(np.nanargmax(log_m)), log_m.shape)


class ShellMaximum(BaseModel):
    """
    ln M_f(r, Ω) approximated by the larger of two grid maxima, so that it never decreases with sample density.
    """

    radius: float
    log_value: float
    coarse_log_value: float
    witness: Quaternion
    samples: int

    @property
    def value(self) -> float:
        with np.errstate(over="ignore"):
            return float(np.exp(self.log_value))

    @property
    def refinement_delta(self) -> float:
        """ Gain in ln M from the denser grid; zero once the grid resolves the maximum. """
        if np.isneginf(self.coarse_log_value):
            return 0.0
        return self.log_value - self.coarse_log_value


def shell_maximum(
    f: BaseFunction, domain: BaseDomain, r: float, n_theta: int = 101, n_axis: int = 64
) -> ShellMaximum:
    """
    :raises InputError: If r ≤ 0.
    :raises EmptyIntersectionError: If the sphere |q| = r has no sampled point of the closure of Ω at which f is
        defined.
    """
    if r <= 0:
        raise InputError(f"radius must be positive, got {r}")
    coarse_grid, coarse_log = shell_log_moduli(f, domain, r, n_theta, spiral_grid(n_axis))
    fine_grid, fine_log = shell_log_moduli(f, domain, r, 2 * n_theta - 1, spiral_grid(2 * n_axis))
    coarse = grid_argmax(coarse_log)
    fine = grid_argmax(fine_log)
    if coarse is None and fine is None:
        raise EmptyIntersectionError(
            f"the sphere of radius {r} does not meet the closure of {domain} inside the domain of f", radius=r
        )
    coarse_value = coarse_log[coarse] if coarse is not None else -np.inf
    fine_value = fine_log[fine] if fine is not None else -np.inf
    if coarse is not None and coarse_value >= fine_value:
        value, witness = coarse_value, coarse_grid[coarse]
    else:
        value, witness = fine_value, fine_grid[fine]
    samples = int(np.sum(~np.isnan(coarse_log)) + np.sum(~np.isnan(fine_log)))
    return ShellMaximum(
        radius=r,
        log_value=float(value),
        coarse_log_value=float(coarse_value),
        witness=Quaternion.from_array(witness),
        samples=samples,
    )


def max_modulus(
    f: BaseFunction, domain: BaseDomain, r: float, n_theta: int = 101, n_axis: int = 64
) -> float:
    """
    M_f(r, Ω): a grid maximum of |f| over the closure of Ω on |q| = r, a lower bound of the true maximum.
    """
    return shell_maximum(f, domain, r, n_theta, n_axis).value


def _overflows(f: BaseFunction, domain: BaseDomain, r: float, n_theta: int, axes: np.ndarray) -> bool:
    _, log_m = shell_log_moduli(f, domain, r, n_theta, axes)
    if np.isposinf(log_m).any():
        return True
    if np.isnan(log_m).all():
        return False
    return bool(np.nanmax(log_m) > LOG_FLOAT_MAX)


def overflow_radius(
    f: BaseFunction,
    domain: BaseDomain,
    r_max: float,
    n_theta: int,
    axes: np.ndarray,
    r_start: float = 1.0,
) -> Optional[float]:
    """
    Returns the radius below r_max at which ln M_f first exceeds `LOG_FLOAT_MAX`, found by bisection in ln r, or
    None if M_f stays representable up to r_max.

    :raises InputError: If M_f overflows at every radius down to `MIN_RADIUS`.
    """
    if not _overflows(f, domain, r_max, n_theta, axes):
        return None
    lo = min(r_start, r_max)
    while _overflows(f, domain, lo, n_theta, axes):
        lo /= 16
        if lo < MIN_RADIUS:
            raise InputError(f"|f| overflows on every shell down to radius {MIN_RADIUS}")

    def excess(log_r: float) -> float:
        return 1.0 if _overflows(f, domain, float(np.exp(log_r)), n_theta, axes) else -1.0

    return float(np.exp(bisect(excess, np.log(lo), np.log(r_max), xtol=1e-6)))


def clip_radii(
    f: BaseFunction,
    domain: BaseDomain,
    radii: Sequence[float],
    n_theta: int,
    axes: np.ndarray,
) -> Tuple[np.ndarray, Optional[float]]:
    """
    Drops the radii beyond half the overflow radius; if none is left, keeps half the overflow radius alone.
    """
    radii = np.asarray(radii, dtype=float)
    clip = overflow_radius(f, domain, float(radii[-1]), n_theta, axes, r_start=float(radii[0]))
    if clip is None:
        return radii, None
    kept = radii[radii <= clip / 2]
    if len(kept) == 0:
        kept = np.array([clip / 2])
    logger.warning(f"|f| overflows beyond r = {clip:.6g}; sampling {len(kept)} of {len(radii)} radii")
    return kept, clip


def default_radii(
    f: BaseFunction, domain: BaseDomain, config: Config, axes: np.ndarray
) -> Tuple[np.ndarray, Optional[float]]:
    """
    n_r geometric radii from r_min to r_max. When M_f overflows first, the grid is moved below half the overflow
    radius, keeping its ratio r_max/r_min if r_min no longer fits.
    """
    clip = overflow_radius(f, domain, config.r_max, config.n_theta, axes, r_start=config.r_min)
    if clip is None:
        return np.geomspace(config.r_min, config.r_max, config.n_r), None
    r_hi = clip / 2
    r_lo = config.r_min if config.r_min < r_hi / 2 else r_hi * (config.r_min / config.r_max)
    logger.warning(f"|f| overflows beyond r = {clip:.6g}; growth grid clipped to [{r_lo:.6g}, {r_hi:.6g}]")
    return np.geomspace(r_lo, r_hi, config.n_r), clip


class FitDiagnostics(BaseModel):
    """
    Least-squares diagnostics of an envelope fit. `slope` is the coefficient being estimated: the order for order
    fits, the type for type fits.
    """

    slope: float
    intercept: float
    residual: float
    raw_slope: float
    stderr: float
    regressors: List[str]


def _least_squares(x: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, float, float]:
    """ Returns the coefficients, the rms residual and the standard error of the first coefficient. """
    coef, *_ = np.linalg.lstsq(x, y, rcond=None)
    resid = y - x @ coef
    rms = float(np.sqrt(np.mean(np.square(resid))))
    dof = len(y) - x.shape[1]
    if dof <= 0:
        return coef, rms, 0.0
    sigma2 = float(np.sum(np.square(resid))) / dof
    cov = sigma2 * np.linalg.pinv(x.T @ x)
    return coef, rms, float(np.sqrt(max(cov[0, 0], 0.0)))


def envelope_fit(
    x: np.ndarray, y: np.ndarray, fraction: float, names: List[str], intercept_index: int
) -> Tuple[FitDiagnostics, np.ndarray]:
    """
    Fits y ≈ x·c, then refits on the points lying highest above the first fit: the top ceil(fraction·n) of the
    residuals, at least as many points as coefficients. The refit approximates a limsup by an upper envelope.

    Returns the diagnostics and the indices of the envelope points, ascending.
    """
    raw, _, _ = _least_squares(x, y)
    resid = y - x @ raw
    keep = min(len(y), max(ceil(fraction * len(y)), x.shape[1]))
    envelope = np.sort(np.argsort(-resid, kind="stable")[:keep])
    coef, rms, stderr = _least_squares(x[envelope], y[envelope])
    return (
        FitDiagnostics(
            slope=float(coef[0]),
            intercept=float(coef[intercept_index]),
            residual=rms,
            raw_slope=float(raw[0]),
            stderr=stderr,
            regressors=names,
        ),
        envelope,
    )


class GrowthEstimate(BaseModel):
    """
    An order or type estimate with the sweep it was fitted to.
    """

    order_est: Optional[float] = None
    type_est: Optional[float] = None
    rho: Optional[float] = Field(None, description="The order a type estimate was made for.")
    r_grid: List[float]
    log_m_values: List[float]
    fit_diagnostics: Optional[FitDiagnostics] = None
    envelope_points: List[int] = []
    degenerate: bool = False
    clipped_at: Optional[float] = None
    non_canonical: bool = False
    trend: Optional[float] = Field(None, description="Slope of ln⁺M/r^ρ against ln r over the upper half.")
    refinement_delta: float = 0.0

    @property
    def m_values(self) -> List[float]:
        with np.errstate(over="ignore"):
            return [float(v) for v in np.exp(self.log_m_values)]

    def sweep_rows(self) -> List[Dict[str, Any]]:
        ln_r = np.log(self.r_grid)
        y = double_log_plus(self.log_m_values)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(ln_r > 0, y / np.where(ln_r > 0, ln_r, 1.0), np.nan)
        envelope = set(self.envelope_points)
        return [
            {
                "r": r,
                "M_f": m,
                "lnp_lnp_M_over_ln_r": float(q),
                "envelope_flag": int(i in envelope),
            }
            for i, (r, m, q) in enumerate(zip(self.r_grid, self.m_values, ratio))
        ]

    def render(self) -> str:
        lines = []
        if self.type_est is not None:
            lines.append(f"type: {self.type_est!r} (rho = {self.rho!r})")
        elif self.order_est is not None:
            lines.append(f"order: {self.order_est!r}")
        fit = self.fit_diagnostics
        if fit is not None:
            lines.append(f"raw estimate: {fit.raw_slope!r}")
            lines.append(f"envelope estimate: {fit.slope!r} ± {fit.stderr!r}")
            lines.append(f"intercept: {fit.intercept!r}")
            lines.append(f"residual: {fit.residual!r}")
            lines.append(f"regressors: {', '.join(fit.regressors)}")
        if self.trend is not None:
            lines.append(f"trend: {self.trend!r}")
        lines.append(f"radii: {len(self.r_grid)} from {self.r_grid[0]!r} to {self.r_grid[-1]!r}")
        lines.append(f"envelope points: {self.envelope_points}")
        lines.append(f"refinement delta: {self.refinement_delta!r}")
        if self.degenerate:
            lines.append("degenerate: ln+ collapses on the sweep")
        if self.clipped_at is not None:
            lines.append(f"clipped at: {self.clipped_at!r}")
        if self.non_canonical:
            lines.append("non-canonical: no order or type is defined on strip domains")
        return "\n".join(lines)


def sweep(
    f: BaseFunction,
    domain: BaseDomain,
    r_grid: Optional[Sequence[float]] = None,
    config: Config = Config(),
    on_progress: ProgressCallback = progress_noop,
) -> Tuple[np.ndarray, List[ShellMaximum], Optional[float], bool]:
    """
    Computes the shell maxima over a radius grid.

    Returns the radii, the maxima, the overflow radius if the default grid was clipped and whether the domain is a
    strip, for which growth is non-canonical.
    """
    axes = spiral_grid(config.n_axis)
    non_canonical = isinstance(domain, StripDomain)
    if non_canonical:
        logger.warning("growth on strip domains is non-canonical; order and type are not defined there")
    clipped_at = None
    if r_grid is None:
        radii, clipped_at = default_radii(f, domain, config, axes)
    else:
        radii = np.asarray(r_grid, dtype=float)
        if radii.ndim != 1 or len(radii) == 0 or not np.all(radii > 0):
            raise InputError("radius grid must be a nonempty list of positive radii")
        if not np.all(np.diff(radii) > 0):
            raise InputError("radius grid must be strictly increasing")
        if len(radii) < 8:
            logger.warning(f"radius grid has {len(radii)} points; estimates want at least 8")

    progress = SweepProgress(len(radii), on_progress)

    def _maximum(r: float) -> ShellMaximum:
        return shell_maximum(f, domain, float(r), config.n_theta, config.n_axis)

    maxima = []
    for chunk in np.array_split(radii, max(1, ceil(len(radii) / config.workers))):
        maxima.extend(ordered_map(_maximum, chunk, config.workers))
        progress.finish(len(chunk))
    for m in maxima:
        logger.debug(f"ln M_f({m.radius:.6g}) = {m.log_value:.17g} over {m.samples} samples")
    return radii, maxima, clipped_at, non_canonical


def estimate_order(
    f: BaseFunction,
    domain: BaseDomain,
    r_grid: Optional[Sequence[float]] = None,
    config: Config = Config(),
    on_progress: ProgressCallback = progress_noop,
) -> GrowthEstimate:
    """
    Fits ln⁺ ln⁺ M_f ≈ ρ ln r + β ln ln r + c over the upper envelope of the sweep.

    Only radii where ln⁺ ln⁺ M_f > 0 enter the fit. The ln ln r term, which absorbs the growth of polynomials, is
    used when every such radius is at least e. With fewer than three such radii the order is reported as 0 and the
    estimate flagged degenerate.
    """
    radii, maxima, clipped_at, non_canonical = sweep(f, domain, r_grid, config, on_progress)
    log_m = np.array([m.log_value for m in maxima])
    common = dict(
        r_grid=list(radii),
        log_m_values=list(log_m),
        clipped_at=clipped_at,
        non_canonical=non_canonical,
        refinement_delta=max(m.refinement_delta for m in maxima),
    )
    y = double_log_plus(log_m)
    active = np.flatnonzero(y > 0)
    if len(active) < 3:
        logger.warning(f"ln+ ln+ M_f vanishes at {len(radii) - len(active)} of {len(radii)} radii; order taken as 0")
        return GrowthEstimate(order_est=0.0, degenerate=True, **common)

    ln_r = np.log(radii[active])
    columns, names = [ln_r], ["ln r"]
    if np.all(ln_r >= 1):
        columns.append(np.log(ln_r))
        names.append("ln ln r")
    columns.append(np.ones_like(ln_r))
    names.append("1")
    fit, envelope = envelope_fit(
        np.stack(columns, axis=-1), y[active], config.envelope_fraction, names, len(names) - 1
    )
    if fit.slope < 0:
        logger.warning(f"order fit has negative slope {fit.slope:.3g}; reporting 0")
    estimate = GrowthEstimate(
        order_est=max(fit.slope, 0.0),
        fit_diagnostics=fit,
        envelope_points=[int(i) for i in active[envelope]],
        **common,
    )
    logger.info(f"order estimate {estimate.order_est:.6g} over {len(active)} radii")
    return estimate


def estimate_type(
    f: BaseFunction,
    domain: BaseDomain,
    rho: float,
    r_grid: Optional[Sequence[float]] = None,
    config: Config = Config(),
    on_progress: ProgressCallback = progress_noop,
) -> GrowthEstimate:
    """
    Fits ln⁺ M_f / r^ρ ≈ σ + b ln r / r^ρ + c / r^ρ over the upper envelope of the sweep. The extra terms absorb
    lower order growth, e.g. polynomial factors, which fade as r grows.

    :raises InputError: If ρ ≤ 0.
    """
    if not rho > 0:
        raise InputError(f"type needs a positive order, got rho = {rho}")
    radii, maxima, clipped_at, non_canonical = sweep(f, domain, r_grid, config, on_progress)
    log_m = np.array([m.log_value for m in maxima])
    common = dict(
        rho=rho,
        r_grid=list(radii),
        log_m_values=list(log_m),
        clipped_at=clipped_at,
        non_canonical=non_canonical,
        refinement_delta=max(m.refinement_delta for m in maxima),
    )
    scale = radii ** rho
    s = log_plus(log_m) / scale
    if not np.any(s > 0):
        logger.warning("ln+ M_f vanishes on the whole sweep; type taken as 0")
        return GrowthEstimate(type_est=0.0, degenerate=True, **common)

    upper = np.arange(len(radii) // 2, len(radii))
    trend = float(np.polyfit(np.log(radii[upper]), s[upper], 1)[0]) if len(upper) >= 2 else None

    x = np.stack([np.ones_like(radii), np.log(radii) / scale, 1.0 / scale], axis=-1)
    names = ["1", "ln r / r^rho", "1 / r^rho"]
    if len(radii) < x.shape[1]:
        x, names = x[:, :1], names[:1]
    fit, envelope = envelope_fit(x, s, config.envelope_fraction, names, 0)
    if fit.slope < 0:
        logger.warning(f"type fit is negative ({fit.slope:.3g}); reporting 0")
    estimate = GrowthEstimate(
        type_est=max(fit.slope, 0.0),
        fit_diagnostics=fit,
        envelope_points=[int(i) for i in envelope],
        trend=trend,
        **common,
    )
    logger.info(f"type estimate {estimate.type_est:.6g} for rho = {rho}")
    return estimate
