from .auxiliary import (
    damped_shell_max,
    exp_damp,
    exp_damp_function,
    omega_delta_function,
    omega_function,
    omega_r,
    omega_r_delta,
)
from .bounded import verify_bounded_pl
from .cone import verify_cone_pl
from .liouville import verify_liouville
from .report import ConclusionStatus, Premise, PremiseStatus, VerificationReport, Witness
from .sharp import verify_sharp_bound
from .strip import verify_strip_pl
