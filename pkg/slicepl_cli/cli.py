import re
import sys
from argparse import ArgumentParser
from typing import Any, Dict, List, NoReturn, Optional

from slicepl.commands import (
    INPUT_ERROR,
    Command,
    EvalCommand,
    OpeningCommand,
    OrderCommand,
    ResidualCommand,
    SplitCommand,
    TypeCommand,
    VerifyCommand,
)
from slicepl.config import Config, read_config
from slicepl.utils.output import ConsoleOutput, SupportsWrite

NEGATIVE_VALUE = re.compile(r"^-\.?\d[\d.eE+,\-]*$")


class SliceplArgumentParser(ArgumentParser):
    """
    Usage errors exit with the input error code instead of argparse's 2, which means a failed premise.

    Values such as "-1,0,0,0" or "-0.5" are read as arguments, not as options.
    """

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NEGATIVE_VALUE

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def default_commands(config: Config, output: ConsoleOutput) -> Dict[str, Command]:
    return {
        "eval": EvalCommand(config, output),
        "split": SplitCommand(config, output),
        "residual": ResidualCommand(config, output),
        "order": OrderCommand(config, output),
        "type": TypeCommand(config, output),
        "verify": VerifyCommand(config, output),
        "opening": OpeningCommand(config, output),
    }


class SliceplCLI:
    def __init__(
        self,
        commands: Optional[Dict[str, Command]] = None,
        config: Optional[Config] = None,
        file: Optional[SupportsWrite] = None,
    ) -> None:
        if commands is None:
            commands = default_commands(config if config is not None else Config(), ConsoleOutput(file=file))
        desc = "Slice regular functions and numerical checks of Phragmén-Lindelöf theorems"
        parser = SliceplArgumentParser(description=desc)
        command_parsers = parser.add_subparsers(
            metavar="<command>", help="Valid commands:", dest="command", required=True
        )
        for name, command in commands.items():
            command_parser = command_parsers.add_parser(name, help=command.help)
            command.configure_parser(command_parser)

        self.commands = commands
        self.parser = parser

    def parse(self, argv: List[str]) -> int:
        args_dict = vars(self.parser.parse_args(argv))
        command_name: str = args_dict.pop("command")
        return self.commands[command_name].execute_safe(**args_dict)


def main(argv: Optional[List[str]] = None) -> int:
    cfg = read_config()
    cfg.configure_logger()
    cli = SliceplCLI(config=cfg)
    return cli.parse(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
