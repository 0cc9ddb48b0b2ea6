from argparse import ArgumentParser
from typing import Optional

from slicepl.domains.analysis import opening, width
from slicepl.domains.sector import SectorDomain
from slicepl.domains.strip import StripDomain
from slicepl.errors import InputError
from slicepl.specs import load_domain

from .command import Command, add_domain_argument


class OpeningCommand(Command):
    help = "Prints the opening of an angular domain or the width of a strip domain"

    def configure_parser(self, parser: ArgumentParser) -> None:
        add_domain_argument(parser)
        parser.add_argument("--naxis", type=int, default=None, help="Coarse axis grid size", metavar="<n>")

    def execute(self, domain: str, naxis: Optional[int] = None) -> int:
        d = load_domain(domain)
        n_axis = naxis if naxis is not None else self.config.n_axis_sup
        if isinstance(d, SectorDomain):
            name, sup = "opening", opening(d, n_axis)
        elif isinstance(d, StripDomain):
            name, sup = "width", width(d, n_axis)
        else:
            raise InputError(f"{d.type} domain has neither an opening nor a width")
        self.output.write_table(
            [
                [name, repr(sup.value)],
                [f"coarse ({sup.n_coarse} axes)", repr(sup.coarse)],
                [f"refined ({sup.n_refined} axes)", repr(sup.value)],
                ["refinement delta", repr(sup.refinement_delta)],
                ["attained at", sup.argmax.as_quaternion().format()],
            ]
        )
        return 0
