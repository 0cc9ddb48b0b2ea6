from slicepl.functions.combinators import Compose, Product, Sum
from slicepl.functions.power_series import PowerSeries
from slicepl.functions.primitives import (
    BranchLog,
    Identity,
    Inverse,
    PrincipalLog,
    QuatConstant,
    RealConstant,
)
from slicepl.functions.unary import Exp, Negate, Pow, RightScale, ShiftByReal

__all__ = [
    "BranchLog",
    "Compose",
    "Exp",
    "Identity",
    "Inverse",
    "Negate",
    "Pow",
    "PowerSeries",
    "PrincipalLog",
    "Product",
    "QuatConstant",
    "RealConstant",
    "RightScale",
    "ShiftByReal",
    "Sum",
]
