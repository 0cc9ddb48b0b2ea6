from typing import Any, Dict

import numpy as np
from loguru import logger

from slicepl.config import Config
from slicepl.domains.analysis import width
from slicepl.domains.strip import StripDomain
from slicepl.errors import InputError
from slicepl.models.function import BaseFunction

from .report import Premise, PremiseStatus, VerificationReport
from .sampling import (
    Region,
    bound_premise,
    boundary_premise,
    conclude,
    log_bound_constant,
    sample_shells,
    verification_radii,
)

THEOREM = "strip"


def width_premise(domain: StripDomain, k: float, config: Config) -> Premise:
    """ k < π/γ for the width γ = sup γ_I. """
    gamma = width(domain, config.n_axis_sup)
    limit = np.pi / gamma.value
    status = PremiseStatus.CHECKED_PASS if k < limit else PremiseStatus.CHECKED_FAIL
    evidence = {"k": k, "width": gamma.value, "pi_over_width": limit, "refinement_delta": gamma.refinement_delta}
    return Premise(name="k < pi/width", status=status, evidence=evidence)


def verify_strip_pl(
    f: BaseFunction,
    domain: StripDomain,
    M: float,
    N: float,
    k: float,
    config: Config = Config(),
) -> VerificationReport:
    """
    Checks the principle on a strip domain of width γ: if |f(q)| ≤ N exp(e^{k|q|}) with k < π/γ and |f| ≤ M on
    the boundary then |f| ≤ M inside.

    :raises InputError: If the domain is not a strip, M < 0, or N or k is not positive.
    """
    if not isinstance(domain, StripDomain):
        raise InputError(f"{domain.type} domain is not a strip")
    if M < 0:
        raise InputError(f"M must be nonnegative, got {M}")
    if not (N > 0 and k > 0):
        raise InputError(f"N and k must be positive, got N = {N}, k = {k}")
    logger.info(f"verifying the strip principle for {f} on {domain} with M = {M}, N = {N}, k = {k}")

    radii, clipped_at = verification_radii(f, domain, config)
    closure = sample_shells(f, domain, radii, Region.CLOSURE, config)
    log_n = float(np.log(N))
    premises = [
        bound_premise(
            "growth",
            closure,
            lambda r: np.asarray(log_n + np.exp(k * r)),
            config.premise_tol,
        ),
        width_premise(domain, k, config),
    ]
    boundary, boundary_samples = boundary_premise(f, domain, radii, M, config)
    premises.append(boundary)
    interior = sample_shells(f, domain, radii, Region.INTERIOR, config)
    parameters: Dict[str, Any] = {"function": str(f), "domain": str(domain), "M": M, "N": N, "k": k}
    return conclude(
        THEOREM,
        premises,
        interior,
        log_bound_constant(M),
        config.tolerance_for(not f.truncated),
        config,
        parameters,
        clipped_at=clipped_at,
        overflow=closure.overflow or boundary_samples.overflow,
    )
