from typing import Any, Dict

import numpy as np
from loguru import logger

from slicepl.config import Config
from slicepl.domains.sector import SectorDomain
from slicepl.errors import InputError
from slicepl.growth import estimate_type
from slicepl.models.function import BaseFunction
from slicepl.utils.sphere import spiral_grid

from .cone import opening_premise
from .report import Premise, VerificationReport
from .sampling import (
    LogBound,
    Region,
    boundary_premise,
    conclude,
    fit_margin,
    premise_status,
    sample_shells,
    verification_radii,
)

THEOREM = "sharp"


def sharp_log_bound(domain: SectorDomain, M: float, rho: float, sigma: float, config: Config) -> LogBound:
    """
    ln(M e^{σ r^ρ cos ρθ}) on the closed shell grids, θ measured from the bisector of each slice.
    """
    theta = domain.relative_angles(config.n_theta, spiral_grid(config.n_axis), closed=True)
    with np.errstate(divide="ignore"):
        log_m = float(np.log(M))
    return lambda r: log_m + sigma * r ** rho * np.cos(rho * theta)


def verify_sharp_bound(
    f: BaseFunction,
    domain: SectorDomain,
    M: float,
    rho: float,
    sigma: float,
    config: Config = Config(),
) -> VerificationReport:
    """
    Checks |f(r e^{I(ζ_I + θ)})| ≤ M e^{σ r^ρ cos ρθ} over the closure of an angular domain whose opening is at
    most π/ρ, for f of order ρ and type σ bounded by M on the boundary.

    The conclusion evidence carries the extreme slacks ln|f| − ln bound; a slack near 0 means the bound is attained.

    :raises InputError: If the domain has no opening, ρ ≤ 0, M < 0 or σ < 0.
    """
    if not isinstance(domain, SectorDomain):
        raise InputError(f"{domain.type} domain has no opening")
    if not rho > 0:
        raise InputError(f"rho must be positive, got {rho}")
    if M < 0 or sigma < 0:
        raise InputError(f"M and sigma must be nonnegative, got M = {M}, sigma = {sigma}")
    logger.info(f"verifying the sharp bound for {f} on {domain} with M = {M}, rho = {rho}, sigma = {sigma}")

    premises = [opening_premise(domain, np.pi / rho, config)]
    estimate = estimate_type(f, domain, rho, config=config)
    stderr = estimate.fit_diagnostics.stderr if estimate.fit_diagnostics is not None else 0.0
    margin = fit_margin(stderr, config)
    premises.append(
        Premise(
            name="type",
            status=premise_status(estimate.type_est <= sigma + margin),
            evidence={
                "type_est": estimate.type_est,
                "sigma": sigma,
                "margin": margin,
                "trend": estimate.trend,
                "degenerate": estimate.degenerate,
            },
        )
    )

    radii, clipped_at = verification_radii(f, domain, config)
    boundary, boundary_samples = boundary_premise(f, domain, radii, M, config)
    premises.append(boundary)
    closure = sample_shells(f, domain, radii, Region.CLOSURE, config)
    parameters: Dict[str, Any] = {
        "function": str(f),
        "domain": str(domain),
        "M": M,
        "rho": rho,
        "sigma": sigma,
    }
    return conclude(
        THEOREM,
        premises,
        closure,
        sharp_log_bound(domain, M, rho, sigma, config),
        config.tolerance_for(not f.truncated),
        config,
        parameters,
        clipped_at=clipped_at,
        overflow=boundary_samples.overflow,
    )
