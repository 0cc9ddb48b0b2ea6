from slicepl.domains.analysis import (
    GridSupremum,
    HalfLineWitness,
    SliceDomainCheck,
    is_slice_domain,
    opening,
    real_halfline_witness,
    width,
)
from slicepl.domains.ball import Ball
from slicepl.domains.profiles import (
    NAMED_PROFILES,
    BaseProfile,
    CallableProfile,
    Constant,
    Harmonic,
)
from slicepl.domains.sector import AngularDomain, CircularCone, SectorDomain
from slicepl.domains.strip import StripDomain, StripLine
from slicepl.domains.whole import WholeSpace

__all__ = [
    "AngularDomain",
    "Ball",
    "BaseProfile",
    "CallableProfile",
    "CircularCone",
    "Constant",
    "GridSupremum",
    "HalfLineWitness",
    "Harmonic",
    "NAMED_PROFILES",
    "SectorDomain",
    "SliceDomainCheck",
    "StripDomain",
    "StripLine",
    "WholeSpace",
    "is_slice_domain",
    "opening",
    "real_halfline_witness",
    "width",
]
