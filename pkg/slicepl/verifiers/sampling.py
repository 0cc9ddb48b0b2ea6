"""
Shell sampling shared by the verifiers: the radii standing in for "r → ∞", grids over the interior, closure and
boundary of a domain, and the comparison of ln|f| with a log bound.

Witnesses are always collected in C order of (radius index, axis index, angle index), whatever the worker count.
"""
from enum import Enum
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from slicepl.config import Config
from slicepl.growth import clip_radii, grid_argmax, grid_log_moduli
from slicepl.models.domain import BaseDomain
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import Quaternion
from slicepl.utils.parallel import ordered_map
from slicepl.utils.sphere import spiral_grid

from .report import ConclusionStatus, Premise, PremiseStatus, VerificationReport, Witness

MAX_VIOLATIONS = 1000

# ln of the bound on the shell of the given radius, broadcastable to that shell's samples
LogBound = Callable[[float], np.ndarray]


class Region(str, Enum):
    INTERIOR = "interior"
    CLOSURE = "closure"
    BOUNDARY = "boundary"
    NEAR_BOUNDARY = "near-boundary"
    LINE = "line"


class ShellSamples(NamedTuple):
    """
    ln of a sampled quantity, |f| unless stated otherwise, on one grid per radius. Grids have shape (n_axis, m, 4)
    and values (n_axis, m), NaN where a grid has no point.
    """

    region: Region
    radii: np.ndarray
    grids: List[np.ndarray]
    log_m: List[np.ndarray]

    @property
    def count(self) -> int:
        return int(sum(np.sum(~np.isnan(grid).any(axis=-1)) for grid in self.grids))

    @property
    def vacuous(self) -> bool:
        """ True when the region has no points at all, as the boundary of ℍ. """
        return all(grid.shape[-2] == 0 for grid in self.grids)

    @property
    def overflow(self) -> bool:
        return any(np.isposinf(values).any() for values in self.log_m)

    def shell_maxima(self) -> np.ndarray:
        """ The largest value on each shell, −inf on shells without samples. """
        return np.array([np.nanmax(v) if not np.isnan(v).all() else -np.inf for v in self.log_m])

    def extremes(self) -> Tuple[float, float]:
        values = [v[~np.isnan(v)] for v in self.log_m]
        values = np.concatenate([v.ravel() for v in values]) if values else np.array([])
        if len(values) == 0:
            return np.nan, np.nan
        return float(np.min(values)), float(np.max(values))

    def witness(self, shell: int, index: Tuple[int, ...], log_bound: float) -> Witness:
        axis_index, theta_index = (int(i) for i in index)
        return Witness(
            point=Quaternion.from_array(self.grids[shell][axis_index, theta_index]),
            radius=float(self.radii[shell]),
            axis_index=axis_index,
            theta_index=theta_index,
            log_modulus=float(self.log_m[shell][axis_index, theta_index]),
            log_bound=float(log_bound),
        )


def verification_radii(
    f: BaseFunction, domain: BaseDomain, config: Config
) -> Tuple[np.ndarray, Optional[float]]:
    """
    n_shell geometric radii from shell_min to shell_max, cut to half the radius at which |f| overflows.
    """
    radii = np.geomspace(config.shell_min, config.shell_max, config.n_shell)
    return clip_radii(f, domain, radii, config.n_theta, spiral_grid(config.n_axis))


def region_grid(domain: BaseDomain, region: Region, r: float, config: Config, axes: np.ndarray) -> np.ndarray:
    if region == Region.INTERIOR:
        return domain.shell_grid(r, config.n_theta, axes, closed=False)
    if region == Region.CLOSURE:
        return domain.shell_grid(r, config.n_theta, axes, closed=True)
    if region == Region.BOUNDARY:
        return domain.boundary_grid(r, config.n_theta, axes)
    if region == Region.NEAR_BOUNDARY:
        return domain.near_boundary_grid(r, config.n_theta, axes, config.offset)
    raise ValueError(f"{region.value} samples are not taken from a domain")


def sample_shells(
    f: BaseFunction, domain: BaseDomain, radii: Sequence[float], region: Region, config: Config
) -> ShellSamples:
    axes = spiral_grid(config.n_axis)

    def _sample(r: float) -> Tuple[np.ndarray, np.ndarray]:
        grid = region_grid(domain, region, float(r), config, axes)
        return grid, grid_log_moduli(f, grid)

    results = ordered_map(_sample, radii, config.workers)
    samples = ShellSamples(
        region=region,
        radii=np.asarray(radii, dtype=float),
        grids=[grid for grid, _ in results],
        log_m=[log_m for _, log_m in results],
    )
    logger.debug(f"sampled {samples.count} {region.value} points over {len(samples.radii)} shells")
    return samples


class Comparison:
    """
    Sampled values against a log bound. A sample exceeds the bound when ln|f| > ln bound + ln(1 + tol).
    """

    def __init__(self, samples: ShellSamples, log_bound: LogBound, tol: float) -> None:
        self.samples = samples
        self.margin = float(np.log1p(tol))
        self.bounds = [
            np.broadcast_to(np.asarray(log_bound(float(r)), dtype=float), values.shape)
            for r, values in zip(samples.radii, samples.log_m)
        ]
        self.slacks = [_slack(values, bound) for values, bound in zip(samples.log_m, self.bounds)]

    def _exceeding(self, shell: int) -> np.ndarray:
        with np.errstate(invalid="ignore"):
            return self.slacks[shell] > self.margin

    @property
    def count(self) -> int:
        return int(sum(np.sum(self._exceeding(i)) for i in range(len(self.slacks))))

    def violations(self, limit: int = MAX_VIOLATIONS) -> List[Witness]:
        witnesses = []
        for shell in range(len(self.slacks)):
            for index in np.argwhere(self._exceeding(shell)):
                if len(witnesses) >= limit:
                    return witnesses
                witnesses.append(self.samples.witness(shell, tuple(index), self.bounds[shell][tuple(index)]))
        return witnesses

    def worst_per_shell(self) -> List[Witness]:
        """ The sample of largest slack on each shell where some sample exceeds the bound. """
        witnesses = []
        for shell, slack in enumerate(self.slacks):
            index = grid_argmax(slack)
            if index is not None and slack[index] > self.margin:
                witnesses.append(self.samples.witness(shell, index, self.bounds[shell][index]))
        return witnesses

    def slack_summary(self) -> Dict[str, float]:
        finite = [s[np.isfinite(s)] for s in self.slacks]
        values = np.concatenate([s.ravel() for s in finite]) if finite else np.array([])
        if len(values) == 0:
            return {}
        return {
            "max_slack": float(np.max(values)),
            "min_slack": float(np.min(values)),
            "max_abs_slack": float(np.max(np.abs(values))),
        }


def _slack(log_m: np.ndarray, log_bound: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore"):
        slack = log_m - log_bound
    # f = 0 meets any bound, including M = 0
    return np.where(np.isneginf(log_m), -np.inf, slack)


def log_bound_constant(bound: float) -> LogBound:
    with np.errstate(divide="ignore"):
        value = float(np.log(bound))
    return lambda r: np.asarray(value)


def boundary_premise(
    f: BaseFunction,
    domain: BaseDomain,
    radii: Sequence[float],
    M: float,
    config: Config,
    region: Region = Region.BOUNDARY,
) -> Tuple[Premise, ShellSamples]:
    """
    |f| ≤ M(1 + premise_tol) on the boundary points of each shell, or on the points offset inward from them for
    boundary limsups.
    """
    samples = sample_shells(f, domain, radii, region, config)
    evidence: Dict[str, Any] = {"region": region.value, "samples": samples.count, "M": M}
    if samples.vacuous:
        evidence["note"] = "the domain has no boundary"
        return Premise(name="boundary bound", status=PremiseStatus.CHECKED_PASS, evidence=evidence), samples
    if samples.count == 0:
        evidence["note"] = "no boundary points on the sampled shells"
        return Premise(name="boundary bound", status=PremiseStatus.UNCHECKED, evidence=evidence), samples

    comparison = Comparison(samples, log_bound_constant(M), config.premise_tol)
    low, high = samples.extremes()
    with np.errstate(over="ignore"):
        evidence.update(min_modulus=float(np.exp(low)), max_modulus=float(np.exp(high)))
    evidence["exceeding"] = comparison.count
    if comparison.count:
        logger.warning(f"|f| exceeds M = {M} at {comparison.count} {region.value} samples")
        return (
            Premise(
                name="boundary bound",
                status=PremiseStatus.CHECKED_FAIL,
                evidence=evidence,
                witnesses=comparison.worst_per_shell(),
            ),
            samples,
        )
    return Premise(name="boundary bound", status=PremiseStatus.FALSIFIABLE_ONLY_PASS, evidence=evidence), samples


def bound_premise(name: str, samples: ShellSamples, log_bound: LogBound, tol: float) -> Premise:
    """ A sampled upper bound over an infinite set: refuted by any exceeding sample, never certified. """
    comparison = Comparison(samples, log_bound, tol)
    evidence: Dict[str, Any] = {"region": samples.region.value, "samples": samples.count}
    evidence.update(comparison.slack_summary())
    evidence["exceeding"] = comparison.count
    if comparison.count:
        return Premise(
            name=name,
            status=PremiseStatus.CHECKED_FAIL,
            evidence=evidence,
            witnesses=comparison.worst_per_shell(),
        )
    return Premise(name=name, status=PremiseStatus.FALSIFIABLE_ONLY_PASS, evidence=evidence)


def boundedness_premise(
    samples: ShellSamples, clipped_at: Optional[float], config: Config, name: str = "bounded"
) -> Premise:
    """
    Sampling can only refute boundedness. It is refuted when |f| overflows at a finite radius, or when the largest
    value over the outer half of the radii exceeds unbounded_factor times the largest over the inner half.
    """
    maxima = samples.shell_maxima()
    split = max(1, len(maxima) // 2)
    inner = float(np.max(maxima[:split]))
    outer_shell = split + int(np.argmax(maxima[split:])) if len(maxima) > split else split - 1
    threshold = inner + float(np.log(config.unbounded_factor))
    evidence: Dict[str, Any] = {
        "region": samples.region.value,
        "samples": samples.count,
        "inner_log_max": inner,
        "outer_log_max": float(maxima[outer_shell]),
    }
    unbounded = clipped_at is not None or bool(maxima[outer_shell] > threshold)
    if clipped_at is not None:
        evidence["overflow_radius"] = clipped_at
    if not unbounded:
        return Premise(name=name, status=PremiseStatus.FALSIFIABLE_ONLY_PASS, evidence=evidence)

    shell = outer_shell if maxima[outer_shell] > -np.inf else int(np.argmax(maxima))
    index = grid_argmax(samples.log_m[shell])
    witnesses = [samples.witness(shell, index, threshold)] if index is not None else []
    logger.warning(f"{name} premise refuted: ln|f| grows from {inner:.6g} to {maxima[outer_shell]:.6g}")
    return Premise(name=name, status=PremiseStatus.CHECKED_FAIL, evidence=evidence, witnesses=witnesses)


def conclude(
    theorem: str,
    premises: List[Premise],
    samples: ShellSamples,
    log_bound: LogBound,
    tol: float,
    config: Config,
    parameters: Dict[str, Any],
    clipped_at: Optional[float] = None,
    overflow: bool = False,
    notes: Sequence[str] = (),
    evidence: Optional[Dict[str, Any]] = None,
) -> VerificationReport:
    """
    Tests the conclusion on the samples and assembles the report. With a failed premise the conclusion is left
    unevaluated and the worst exceeding sample of each shell is kept as a diagnostic witness.
    """
    comparison = Comparison(samples, log_bound, tol)
    conclusion_evidence: Dict[str, Any] = {"region": samples.region.value, "tol": tol}
    conclusion_evidence.update(comparison.slack_summary())
    conclusion_evidence.update(evidence or {})
    common = dict(
        theorem=theorem,
        premises=premises,
        conclusion_evidence=conclusion_evidence,
        samples=samples.count,
        overflow=overflow or samples.overflow,
        clipped_at=clipped_at,
        parameters=parameters,
        config=config.echo(),
        notes=list(notes),
    )
    if any(p.failed for p in premises):
        failed = ", ".join(p.name for p in premises if p.failed)
        logger.info(f"{theorem}: premise {failed} fails; conclusion not evaluated")
        return VerificationReport(
            conclusion=ConclusionStatus.NOT_EVALUATED,
            diagnostic_witnesses=comparison.worst_per_shell(),
            **common,
        )
    count = comparison.count
    if count:
        logger.warning(f"{theorem}: conclusion violated at {count} of {samples.count} samples")
        return VerificationReport(
            conclusion=ConclusionStatus.VIOLATED,
            violations=comparison.violations(),
            violation_count=count,
            **common,
        )
    logger.success(f"{theorem}: conclusion holds on {samples.count} samples")
    return VerificationReport(conclusion=ConclusionStatus.PASS, **common)


def fit_margin(stderr: float, config: Config) -> float:
    """ The distance a fitted order or type has to keep from a threshold. """
    return max(config.fit_tol, 2.0 * stderr)


def premise_status(passed: bool) -> PremiseStatus:
    return PremiseStatus.FALSIFIABLE_ONLY_PASS if passed else PremiseStatus.CHECKED_FAIL
