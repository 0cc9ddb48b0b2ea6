import os
from enum import Enum
from sys import stderr
from typing import Any, Dict, Optional

import yaml
from loguru import logger
from pydantic import BaseModel, Extra, Field, root_validator


class LogLevel(str, Enum):
    TRACE = "TRACE"
    DEBUG = "DEBUG"
    INFO = "INFO"
    SUCCESS = "SUCCESS"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


# Fields which change how a run is carried out but not what it computes.
_NOT_ECHOED = {"workers", "log_level", "csv_path"}


class Config(BaseModel):
    """
    Tolerances, sample counts and radii shared by growth estimation and the verifiers.
    """

    conclusion_tol: float = Field(1e-9, gt=0)
    generic_tol: float = Field(1e-6, gt=0)
    premise_tol: float = Field(1e-6, gt=0)
    algebra_tol: float = Field(1e-12, gt=0)
    fit_tol: float = Field(0.05, gt=0)
    unbounded_factor: float = Field(2.0, gt=1)

    n_theta: int = Field(101, ge=1)
    n_axis: int = Field(64, ge=1)
    n_axis_sup: int = Field(512, ge=1)

    n_r: int = Field(16, ge=1)
    r_min: float = Field(8.0, gt=0)
    r_max: float = Field(1024.0, gt=0)
    n_shell: int = Field(11, ge=1)
    shell_min: float = Field(1.0, gt=0)
    shell_max: float = Field(1024.0, gt=0)

    offset: float = Field(1e-6, gt=0, lt=1)
    fd_step: float = Field(1e-4, gt=0)
    envelope_fraction: float = Field(0.5, gt=0, le=1)

    workers: int = Field(1, ge=1)
    seed: int = 0
    csv_path: Optional[str] = None
    log_level: LogLevel = LogLevel(os.environ.get("SLICEPL_LOGGING", "CRITICAL"))

    class Config:
        extra = Extra.forbid
        validate_assignment = True

    @root_validator(skip_on_failure=True)
    def _ordered_ranges(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if not values["r_min"] < values["r_max"]:
            raise ValueError(f"r_min must be below r_max, got {values['r_min']} ≥ {values['r_max']}")
        if not values["shell_min"] < values["shell_max"]:
            raise ValueError(
                f"shell_min must be below shell_max, got {values['shell_min']} ≥ {values['shell_max']}"
            )
        return values

    def configure_logger(self) -> None:
        # Set up logger
        logger.remove()
        logger.add(stderr, level=self.log_level.value)

    def merge(self, **overrides: Any) -> "Config":
        """
        Returns a copy with the given fields replaced; None values leave a field as it is, so unset command line
        flags fall through to the config file.
        """
        changes = {key: value for key, value in overrides.items() if value is not None}
        return Config(**{**self.dict(), **changes})

    def echo(self) -> Dict[str, Any]:
        """ The fields which determine the outcome of a run, for inclusion in reports. """
        return self.dict(exclude=_NOT_ECHOED)

    def tolerance_for(self, closed_form: bool) -> float:
        return self.conclusion_tol if closed_form else self.generic_tol


def get_config_path() -> str:
    return os.environ.get("SLICEPL_CONFIG_FILE", "slicepl.yml")


def read_config(path: Optional[str] = None) -> Config:
    if path is None:
        path = get_config_path()
    try:
        with open(path) as fp:
            raw = yaml.load(fp, Loader=yaml.SafeLoader)
            if raw is None:
                return Config()
            cfg = Config(**raw)
            return cfg
    except FileNotFoundError:
        return Config()
