import os
from typing import Iterator

import pytest
from pydantic import ValidationError

from slicepl.config import Config, get_config_path, read_config


def test_read_config_should_merge_file_with_defaults(mock_path: str) -> None:
    cfg = read_config(os.path.join(mock_path, "slicepl.yml"))
    assert cfg.n_theta == 21
    assert cfg.n_axis == 8
    assert cfg.shell_max == 16
    assert cfg.conclusion_tol == 1e-9, "unset fields should keep their defaults"


def test_read_config_should_fall_back_to_defaults(file_paths: Iterator[str]) -> None:
    assert read_config(next(file_paths)) == Config(), "a missing file should give the defaults"

    path = next(file_paths)
    with open(path, "w") as fp:
        fp.write("")
    assert read_config(path) == Config(), "an empty file should give the defaults"


def test_config_path_should_come_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("SLICEPL_CONFIG_FILE", raising=False)
    assert get_config_path() == "slicepl.yml"
    monkeypatch.setenv("SLICEPL_CONFIG_FILE", "other.yml")
    assert get_config_path() == "other.yml"


def test_merge_should_ignore_unset_overrides() -> None:
    cfg = Config(n_theta=21)
    merged = cfg.merge(n_theta=None, n_axis=4, seed=7)
    assert merged.n_theta == 21
    assert merged.n_axis == 4
    assert merged.seed == 7
    assert cfg.n_axis == 64, "merge should not change the original"


@pytest.mark.parametrize(
    "fields",
    [
        {"r_min": 10.0, "r_max": 5.0},
        {"shell_min": 2.0, "shell_max": 2.0},
        {"n_theta": 0},
        {"conclusion_tol": 0.0},
        {"unbounded_factor": 1.0},
        {"offset": 1.0},
        {"unknown": 1},
    ],
)
def test_config_should_reject_invalid_fields(fields: dict) -> None:
    with pytest.raises(ValidationError):
        Config(**fields)


def test_echo_should_leave_out_run_settings() -> None:
    echo = Config(workers=4, csv_path="out.csv").echo()
    assert "workers" not in echo
    assert "csv_path" not in echo
    assert "log_level" not in echo
    assert echo["n_axis_sup"] == 512


def test_tolerance_should_depend_on_closed_form() -> None:
    cfg = Config()
    assert cfg.tolerance_for(True) == 1e-9
    assert cfg.tolerance_for(False) == 1e-6
