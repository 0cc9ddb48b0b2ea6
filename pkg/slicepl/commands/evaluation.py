from argparse import ArgumentParser
from typing import Optional, Tuple

from slicepl.models.quaternion import I, Quaternion, UnitImaginary
from slicepl.slicing import check_residual, orthogonal_unit, split
from slicepl.specs import load_function

from .command import Command, add_function_argument, coordinates


def _complex(value: Tuple[float, float]) -> str:
    return "[" + ", ".join(format(v, ".17g") for v in value) + "]"


class EvalCommand(Command):
    help = "Evaluates a function spec at a quaternion"

    def configure_parser(self, parser: ArgumentParser) -> None:
        add_function_argument(parser)
        parser.add_argument(
            "--point",
            "-q",
            required=True,
            type=Quaternion.from_string,
            help="The quaternion as w,x,y,z",
            metavar="<w,x,y,z>",
        )

    def execute(self, function: str, point: Quaternion) -> int:
        f = load_function(function)
        self.output.write_line(f(point).format())
        return 0


class SplitCommand(Command):
    help = "Prints the components F and G of f = F + G·J on a slice"

    def configure_parser(self, parser: ArgumentParser) -> None:
        add_function_argument(parser)
        parser.add_argument(
            "--point",
            "-z",
            required=True,
            type=coordinates,
            help="The point x + yI of the slice as x,y",
            metavar="<x,y>",
        )
        parser.add_argument(
            "--axis",
            type=UnitImaginary.coerce,
            default=I,
            help="The imaginary unit I of the slice as w,x,y,z (default i)",
            metavar="<w,x,y,z>",
        )
        parser.add_argument(
            "--other",
            type=UnitImaginary.coerce,
            default=None,
            help="A unit J orthogonal to I as w,x,y,z (default: chosen from I)",
            metavar="<w,x,y,z>",
        )

    def execute(
        self,
        function: str,
        point: Tuple[float, float],
        axis: UnitImaginary = I,
        other: Optional[UnitImaginary] = None,
    ) -> int:
        f = load_function(function)
        if other is None:
            other = orthogonal_unit(axis)
        pair = split(f, axis, other, complex(*point))
        self.output.write_line(f"F: {_complex(pair.F)}")
        self.output.write_line(f"G: {_complex(pair.G)}")
        self.output.write_line(f"I: {axis.as_quaternion().format()}")
        self.output.write_line(f"J: {other.as_quaternion().format()}")
        return 0


class ResidualCommand(Command):
    help = "Prints the Cauchy-Riemann residual of a function spec at a point of a slice"

    def configure_parser(self, parser: ArgumentParser) -> None:
        add_function_argument(parser)
        parser.add_argument(
            "--point",
            "-z",
            required=True,
            type=coordinates,
            help="The point x + yI of the slice as x,y",
            metavar="<x,y>",
        )
        parser.add_argument(
            "--axis",
            type=UnitImaginary.coerce,
            default=I,
            help="The imaginary unit I of the slice as w,x,y,z (default i)",
            metavar="<w,x,y,z>",
        )
        parser.add_argument("--step", type=float, default=None, help="Finite difference step", metavar="<h>")
        parser.add_argument("--tol", type=float, default=None, help="Relative residual tolerance", metavar="<tol>")

    def execute(
        self,
        function: str,
        point: Tuple[float, float],
        axis: UnitImaginary = I,
        step: Optional[float] = None,
        tol: Optional[float] = None,
    ) -> int:
        f = load_function(function)
        h = step if step is not None else self.config.fd_step
        check = check_residual(f, axis, complex(*point), h, tol if tol is not None else self.config.generic_tol)
        self.output.write_table(
            [
                ["residual", repr(check.residual)],
                ["refined residual", repr(check.refined_residual)],
                ["threshold", repr(check.threshold)],
                ["regular", "yes" if check.regular else "no"],
            ]
        )
        return 0
