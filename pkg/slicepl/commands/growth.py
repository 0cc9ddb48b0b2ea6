from argparse import ArgumentParser
from typing import Any, Optional

from slicepl.growth import SWEEP_COLUMNS, GrowthEstimate, estimate_order, estimate_type
from slicepl.specs import load_domain, load_function
from slicepl.utils.files import write_csv

from .command import Command, add_domain_argument, add_function_argument, add_run_arguments


class _SweepCommand(Command):
    step_name = "sweep"

    def configure_parser(self, parser: ArgumentParser) -> None:
        add_function_argument(parser)
        add_domain_argument(parser)
        add_run_arguments(parser)

    def on_progress(self, progress: float) -> None:
        self.output.write_step_progress(self.step_name, progress)

    def finish(self, estimate: GrowthEstimate, csv_path: Optional[str]) -> int:
        self.output.write_step_complete(self.step_name)
        self.output.write_line(estimate.render())
        if csv_path is not None:
            write_csv(csv_path, SWEEP_COLUMNS, estimate.sweep_rows())
            self.output.write_line(f"sweep written to {csv_path}")
        return 0


class OrderCommand(_SweepCommand):
    help = "Estimates the growth order of a function on a domain"
    step_name = "order sweep"

    def execute(self, function: str, domain: str, config_path: Optional[str] = None, **flags: Any) -> int:
        config = self.resolve_config(config_path, **flags)
        estimate = estimate_order(
            load_function(function), load_domain(domain), config=config, on_progress=self.on_progress
        )
        return self.finish(estimate, config.csv_path)


class TypeCommand(_SweepCommand):
    help = "Estimates the growth type of a function on a domain for a given order"
    step_name = "type sweep"

    def configure_parser(self, parser: ArgumentParser) -> None:
        super().configure_parser(parser)
        parser.add_argument("--rho", type=float, required=True, help="The order", metavar="<rho>")

    def execute(
        self, function: str, domain: str, rho: float, config_path: Optional[str] = None, **flags: Any
    ) -> int:
        config = self.resolve_config(config_path, **flags)
        estimate = estimate_type(
            load_function(function), load_domain(domain), rho, config=config, on_progress=self.on_progress
        )
        return self.finish(estimate, config.csv_path)
