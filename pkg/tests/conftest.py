import os
import re
import shutil
from pathlib import Path
from sys import stderr
from typing import Generator
from uuid import uuid4

import numpy as np
import pytest
from loguru import logger
from pytest import Item

from slicepl.config import Config, read_config

# Set up logger with all logs because pytest itself suppresses output
logger.remove()
logger.add(stderr, level="TRACE")

FIXTURE_PATH = os.path.join(os.path.dirname(__file__), "fixtures", "files")


@pytest.fixture(scope="function", autouse=True)
def mock_path(tmp_path: Path) -> str:
    """ Copies the spec files from fixtures into a fresh directory and returns it. """
    path = str(tmp_path / "files")
    shutil.copytree(FIXTURE_PATH, path)
    logger.debug(f"copied fixtures to {path=}")
    return path


def _file_path_generator(root_path: str) -> Generator[str, None, None]:
    while True:
        path = os.path.join(root_path, str(uuid4()))
        logger.debug(f"generated {path=}")
        yield path


@pytest.fixture(scope="function")
def file_paths(mock_path: str) -> Generator[str, None, None]:
    """ Returns a generator which can be used to get file paths for creating test files. """
    return _file_path_generator(mock_path)


@pytest.fixture(scope="function")
def functions(mock_path: str) -> str:
    return os.path.join(mock_path, "functions")


@pytest.fixture(scope="function")
def domains(mock_path: str) -> str:
    return os.path.join(mock_path, "domains")


@pytest.fixture(scope="function")
def config(mock_path: str) -> Config:
    """ The coarse grids of the fixture config file. """
    return read_config(os.path.join(mock_path, "slicepl.yml"))


@pytest.fixture(scope="function")
def rng() -> np.random.Generator:
    """ A generator seeded from the default config, so that property suites see the same batches every run. """
    return np.random.default_rng(Config().seed)


def pytest_make_parametrize_id(config, val, argname):
    val_str = repr(val).replace("-", "--")
    return f"{argname}: {val_str}"


def pytest_itemcollected(item: Item) -> None:
    nodeid: str = item._nodeid

    # Check if item is parameterised
    args_idx = nodeid.rfind("[")
    if args_idx == -1:
        return

    # Split up "function[val1-val2]"" into "function" and "val1-val2"
    args_idx_end = nodeid.find("]", args_idx)
    name = nodeid[:args_idx] + nodeid[args_idx_end + 1 :]
    args_str = nodeid[args_idx + 1 : args_idx_end]

    args_str = re.sub(r"([^-])-([^-])", r"\1, \2", args_str)
    item._nodeid = f"{name} ({args_str})"
