from abc import ABC, abstractmethod
from argparse import ArgumentParser
from typing import Any, Dict, Optional, Tuple

from loguru import logger
from pydantic import ValidationError

from slicepl.config import Config, read_config
from slicepl.errors import InputError, SliceplError
from slicepl.utils.output import ConsoleOutput

INPUT_ERROR = 3

# Command line flag → config field, for the radius flags of growth sweeps and of verifier shells
GROWTH_RADII = {"rmin": "r_min", "rmax": "r_max", "nr": "n_r"}
SHELL_RADII = {"rmin": "shell_min", "rmax": "shell_max", "nr": "n_shell"}


def coordinates(value: str) -> Tuple[float, float]:
    """ Parses "x,y", the point x + yI of a slice. """
    parts = [part.strip() for part in value.strip().strip("[]()").split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 2 comma-separated coordinates: {value!r}")
    return float(parts[0]), float(parts[1])


class Command(ABC):
    def __init__(self, config: Optional[Config] = None, output: Optional[ConsoleOutput] = None) -> None:
        super().__init__()
        self.config = config if config is not None else Config()
        self.output = output if output is not None else ConsoleOutput()

    @property
    @abstractmethod
    def help(self) -> str:
        ...

    def configure_parser(self, parser: ArgumentParser) -> None:
        return

    @abstractmethod
    def execute(self, *args: Any, **kwargs: Any) -> int:
        ...

    def execute_safe(self, *args: Any, **kwargs: Any) -> int:
        """ Runs the command and returns its exit code; input errors of any kind give `INPUT_ERROR`. """
        try:
            return self.execute(*args, **kwargs)
        except (SliceplError, ValidationError, ValueError, OSError) as exc:
            logger.exception(exc)
            self.output.write_line(f"error: {exc}")
            return INPUT_ERROR
        except KeyboardInterrupt:
            self.output.write_line("Aborted due to keyboard interrupt.")
            return INPUT_ERROR
        finally:
            self.output.end()

    def resolve_config(
        self,
        config_path: Optional[str] = None,
        radii: Dict[str, str] = GROWTH_RADII,
        **flags: Any,
    ) -> Config:
        """
        Command line flags over the config file over defaults. Radius flags go to the fields named by `radii`; --tol
        sets both conclusion tolerances.
        """
        base = read_config(config_path) if config_path is not None else self.config
        overrides = {
            "n_theta": flags.pop("ntheta", None),
            "n_axis": flags.pop("naxis", None),
            "offset": flags.pop("offset", None),
            "seed": flags.pop("seed", None),
            "workers": flags.pop("workers", None),
            "csv_path": flags.pop("csv", None),
        }
        tol = flags.pop("tol", None)
        overrides.update(conclusion_tol=tol, generic_tol=tol)
        for flag, field in radii.items():
            overrides[field] = flags.pop(flag, None)
        if flags:
            raise InputError(f"unknown options: {', '.join(sorted(flags))}")
        return base.merge(**overrides)


def add_function_argument(parser: ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--function",
        "-f",
        required=required,
        dest="function",
        help="Path of a JSON or YAML function spec",
        metavar="<path>",
    )


def add_domain_argument(parser: ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--domain",
        "-d",
        required=required,
        dest="domain",
        help="Path of a JSON or YAML domain spec",
        metavar="<path>",
    )


def add_run_arguments(parser: ArgumentParser) -> None:
    """ The sampling, tolerance and output flags shared by sweeps and verifiers. """
    parser.add_argument("--rmin", type=float, help="Smallest radius", metavar="<r>")
    parser.add_argument("--rmax", type=float, help="Largest radius", metavar="<r>")
    parser.add_argument("--nr", type=int, help="Number of radii", metavar="<n>")
    parser.add_argument("--ntheta", type=int, help="Angles per slice and shell", metavar="<n>")
    parser.add_argument("--naxis", type=int, help="Imaginary units per shell", metavar="<n>")
    parser.add_argument("--tol", type=float, help="Relative tolerance of conclusions", metavar="<tol>")
    parser.add_argument("--offset", type=float, help="Inward boundary offset, relative to r", metavar="<offset>")
    parser.add_argument("--csv", help="Path of the CSV file to write", metavar="<path>")
    parser.add_argument("--seed", type=int, help="Random seed", metavar="<seed>")
    parser.add_argument("--workers", type=int, help="Sampling threads", metavar="<n>")
    parser.add_argument("--config", dest="config_path", help="Path of a YAML config file", metavar="<path>")
