from argparse import ArgumentParser
from typing import Any, Optional, Tuple

from slicepl.config import Config
from slicepl.errors import InputError
from slicepl.models.domain import BaseDomain
from slicepl.models.function import BaseFunction
from slicepl.models.quaternion import I, UnitImaginary
from slicepl.specs import load_domain, load_function
from slicepl.utils.files import write_csv
from slicepl.verifiers import (
    damped_shell_max,
    verify_bounded_pl,
    verify_cone_pl,
    verify_liouville,
    verify_sharp_bound,
    verify_strip_pl,
)
from slicepl.verifiers.report import VIOLATION_COLUMNS, VerificationReport

from .command import SHELL_RADII, Command, add_domain_argument, add_function_argument, add_run_arguments, coordinates

THEOREMS = ["bounded", "cone", "sharp", "strip", "liouville"]


def _required(name: str, value: Optional[float], theorem: str) -> float:
    if value is None:
        raise InputError(f"verify {theorem} needs --{name}")
    return value


class VerifyCommand(Command):
    help = "Checks a Phragmén-Lindelöf theorem for a function spec"

    def configure_parser(self, parser: ArgumentParser) -> None:
        parser.add_argument("theorem", choices=THEOREMS, help="The theorem to check")
        add_function_argument(parser)
        add_domain_argument(parser, required=False)
        parser.add_argument("--M", type=float, dest="M", help="Bound on the boundary", metavar="<M>")
        parser.add_argument("--alpha", type=float, help="Cone exponent: the opening is pi/alpha", metavar="<alpha>")
        parser.add_argument("--rho", type=float, help="Order of the sharp bound", metavar="<rho>")
        parser.add_argument("--sigma", type=float, help="Type of the sharp bound", metavar="<sigma>")
        parser.add_argument("--N", type=float, dest="N", help="Factor of the strip growth bound", metavar="<N>")
        parser.add_argument("--k", type=float, help="Exponent of the strip growth bound", metavar="<k>")
        parser.add_argument(
            "--axis",
            type=UnitImaginary.coerce,
            default=I,
            help="Imaginary unit of the Liouville slice as w,x,y,z (default i)",
            metavar="<w,x,y,z>",
        )
        parser.add_argument(
            "--line-point",
            type=coordinates,
            default=(0.0, 0.0),
            dest="line_point",
            help="A point x,y of the Liouville line in the slice",
            metavar="<x,y>",
        )
        parser.add_argument(
            "--line-direction",
            type=coordinates,
            default=(1.0, 0.0),
            dest="line_direction",
            help="The direction x,y of the Liouville line",
            metavar="<x,y>",
        )
        parser.add_argument(
            "--gamma",
            type=float,
            help="Exponent of the damping factor e^(-q^gamma) reported with the cone check",
            metavar="<gamma>",
        )
        add_run_arguments(parser)

    def execute(
        self,
        theorem: str,
        function: str,
        domain: Optional[str] = None,
        M: Optional[float] = None,
        alpha: Optional[float] = None,
        rho: Optional[float] = None,
        sigma: Optional[float] = None,
        N: Optional[float] = None,
        k: Optional[float] = None,
        axis: UnitImaginary = I,
        line_point: Tuple[float, float] = (0.0, 0.0),
        line_direction: Tuple[float, float] = (1.0, 0.0),
        gamma: Optional[float] = None,
        config_path: Optional[str] = None,
        **flags: Any,
    ) -> int:
        config = self.resolve_config(config_path, radii=SHELL_RADII, **flags)
        f = load_function(function)
        d = load_domain(domain) if domain is not None else None

        def _domain() -> BaseDomain:
            if d is None:
                raise InputError(f"verify {theorem} needs --domain")
            return d

        if theorem == "bounded":
            report = verify_bounded_pl(f, _domain(), _required("M", M, theorem), config)
        elif theorem == "cone":
            alpha = _required("alpha", alpha, theorem)
            report = verify_cone_pl(f, alpha, _required("M", M, theorem), config, domain=d)
        elif theorem == "sharp":
            report = verify_sharp_bound(
                f,
                _domain(),
                _required("M", M, theorem),
                _required("rho", rho, theorem),
                _required("sigma", sigma, theorem),
                config,
            )
        elif theorem == "strip":
            report = verify_strip_pl(
                f,
                _domain(),
                _required("M", M, theorem),
                _required("N", N, theorem),
                _required("k", k, theorem),
                config,
            )
        else:
            report = verify_liouville(f, axis, (line_point, line_direction), config)

        self.output.write_line(report.render())
        if theorem == "cone" and gamma is not None:
            self.write_damping(f, alpha, gamma, report, config)
        self.write_violations(report, config)
        return report.exit_code

    def write_damping(
        self, f: BaseFunction, alpha: float, gamma: float, report: VerificationReport, config: Config
    ) -> None:
        r = report.clipped_at / 2 if report.clipped_at is not None else config.shell_max
        value = damped_shell_max(f, alpha, gamma, 1.0, r, config)
        self.output.write_line(f"damped shell maximum (gamma = {gamma!r}, delta = 1.0, r = {r!r}): {value!r}")

    def write_violations(self, report: VerificationReport, config: Config) -> None:
        if config.csv_path is None:
            return
        witnesses = report.violations or report.diagnostic_witnesses
        if not witnesses:
            return
        write_csv(config.csv_path, VIOLATION_COLUMNS, [w.csv_row() for w in witnesses])
        self.output.write_line(f"witnesses written to {config.csv_path}")
