from typing import Any, Dict, Optional

import numpy as np
from loguru import logger

from slicepl.config import Config
from slicepl.domains.analysis import opening
from slicepl.domains.sector import CircularCone, SectorDomain
from slicepl.errors import InputError
from slicepl.growth import estimate_order
from slicepl.models.function import BaseFunction

from .report import Premise, PremiseStatus, VerificationReport
from .sampling import (
    Region,
    boundary_premise,
    conclude,
    fit_margin,
    log_bound_constant,
    premise_status,
    sample_shells,
    verification_radii,
)

THEOREM = "cone"


def opening_premise(domain: SectorDomain, limit: float, config: Config) -> Premise:
    """ sup φ_I ≤ limit, checked on a refined axis grid with relative slack premise_tol. """
    sup = opening(domain, config.n_axis_sup)
    evidence = {
        "opening": sup.value,
        "limit": limit,
        "refinement_delta": sup.refinement_delta,
        "argmax": sup.argmax.as_quaternion(),
    }
    passed = sup.value <= limit * (1 + config.premise_tol)
    status = PremiseStatus.CHECKED_PASS if passed else PremiseStatus.CHECKED_FAIL
    return Premise(name="opening", status=status, evidence=evidence)


def verify_cone_pl(
    f: BaseFunction,
    alpha: float,
    M: float,
    config: Config = Config(),
    domain: Optional[SectorDomain] = None,
) -> VerificationReport:
    """
    Checks the principle on the cone C(π/α), or on an angular domain of opening π/α: if the order of f is below α
    and |f| ≤ M on the boundary then |f| ≤ M inside.

    The order premise holds when the fitted order stays below α by the fit margin; the estimate is only ever
    evidence, so a pass is falsifiable-only.

    :raises InputError: If α ≤ 1/2 without a domain, M < 0, or the domain has no opening.
    """
    if not alpha > 0:
        raise InputError(f"alpha must be positive, got {alpha}")
    if M < 0:
        raise InputError(f"M must be nonnegative, got {M}")
    limit = np.pi / alpha
    premises = []
    if domain is None:
        if not alpha > 0.5:
            raise InputError(f"the cone C(π/α) needs α > 1/2, got {alpha}")
        domain = CircularCone(phi=limit)
    elif not isinstance(domain, SectorDomain):
        raise InputError(f"{domain.type} domain has no opening")
    else:
        premises.append(opening_premise(domain, limit, config))
    logger.info(f"verifying the cone principle for {f} on {domain} with alpha = {alpha}, M = {M}")

    estimate = estimate_order(f, domain, config=config)
    stderr = estimate.fit_diagnostics.stderr if estimate.fit_diagnostics is not None else 0.0
    margin = fit_margin(stderr, config)
    premises.append(
        Premise(
            name="order",
            status=premise_status(estimate.order_est < alpha - margin),
            evidence={
                "order_est": estimate.order_est,
                "alpha": alpha,
                "margin": margin,
                "degenerate": estimate.degenerate,
                "refinement_delta": estimate.refinement_delta,
            },
        )
    )

    radii, clipped_at = verification_radii(f, domain, config)
    boundary, boundary_samples = boundary_premise(f, domain, radii, M, config)
    premises.append(boundary)
    interior = sample_shells(f, domain, radii, Region.INTERIOR, config)
    parameters: Dict[str, Any] = {"function": str(f), "domain": str(domain), "alpha": alpha, "M": M}
    return conclude(
        THEOREM,
        premises,
        interior,
        log_bound_constant(M),
        config.tolerance_for(not f.truncated),
        config,
        parameters,
        clipped_at=clipped_at if clipped_at is not None else estimate.clipped_at,
        overflow=boundary_samples.overflow,
    )
