from typing import Any, Dict

from loguru import logger

from slicepl.config import Config
from slicepl.domains.sector import SectorDomain
from slicepl.domains.strip import StripDomain
from slicepl.errors import InputError
from slicepl.models.domain import BaseDomain
from slicepl.models.function import BaseFunction

from .report import Premise, PremiseStatus, VerificationReport
from .sampling import (
    Region,
    boundary_premise,
    boundedness_premise,
    conclude,
    log_bound_constant,
    sample_shells,
    verification_radii,
)

THEOREM = "bounded"


def slice_premise(domain: BaseDomain) -> Premise:
    """
    The topological hypothesis: Ω ∖ (−∞, t] or Ω ∖ [t, +∞) is a slice domain for some real t, or else every
    slice Ω_I is simply connected.
    """
    if domain.slice_hypothesis:
        evidence = {"hypothesis": "removing a real half-line leaves a slice domain"}
        return Premise(name="slice domain", status=PremiseStatus.CHECKED_PASS, evidence=evidence)
    if isinstance(domain, (SectorDomain, StripDomain)):
        # planar angles and strips are simply connected
        evidence = {"hypothesis": "every slice is simply connected"}
        return Premise(name="slice domain", status=PremiseStatus.CHECKED_PASS, evidence=evidence)
    evidence = {"note": f"no slice hypothesis is known for {domain.type} domains"}
    return Premise(name="slice domain", status=PremiseStatus.UNCHECKED, evidence=evidence)


def verify_bounded_pl(
    f: BaseFunction, domain: BaseDomain, M: float, config: Config = Config()
) -> VerificationReport:
    """
    Checks that a bounded f with limsup |f| ≤ M at every boundary point of an unbounded domain satisfies |f| ≤ M
    throughout.

    Boundedness is refuted, never certified, from the shell maxima over the closure. The boundary limsup is read at
    points moved inward from the boundary by offset·r.

    :raises InputError: If the domain is bounded or M < 0.
    """
    if domain.bounded:
        raise InputError(
            f"{domain.type} domain is bounded; use the maximum modulus grid check for bounded domains"
        )
    if M < 0:
        raise InputError(f"M must be nonnegative, got {M}")
    logger.info(f"verifying the bounded principle for {f} on {domain} with M = {M}")

    radii, clipped_at = verification_radii(f, domain, config)
    closure = sample_shells(f, domain, radii, Region.CLOSURE, config)
    boundary, boundary_samples = boundary_premise(f, domain, radii, M, config, Region.NEAR_BOUNDARY)
    premises = [
        boundedness_premise(closure, clipped_at, config),
        boundary,
        slice_premise(domain),
    ]
    interior = sample_shells(f, domain, radii, Region.INTERIOR, config)
    parameters: Dict[str, Any] = {"function": str(f), "domain": str(domain), "M": M}
    notes = []
    if premises[-1].status == PremiseStatus.UNCHECKED:
        notes.append("the slice domain hypothesis was not checked; the verdict assumes it")
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
        notes=notes,
    )
