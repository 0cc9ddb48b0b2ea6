# flake8: noqa
from .command import INPUT_ERROR, Command
from .domain import OpeningCommand
from .evaluation import EvalCommand, ResidualCommand, SplitCommand
from .growth import OrderCommand, TypeCommand
from .verify import VerifyCommand
