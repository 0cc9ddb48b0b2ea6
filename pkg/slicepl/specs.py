"""
Reading function and domain specs from JSON or YAML files.
"""
import json
import os
from typing import Any, Dict, Optional

import yaml
from loguru import logger
from pydantic import ValidationError

import slicepl.domains  # noqa: F401
import slicepl.functions  # noqa: F401
from slicepl.errors import InputError, PropositionError, SpecParseError
from slicepl.models.domain import BaseDomain
from slicepl.models.function import BaseFunction

_DEFAULT_SPEC_FORMAT = "json"


def _infer_spec_format(path: str) -> str:
    name = os.path.basename(path)
    ext_idx = name.rfind(os.path.extsep)
    if ext_idx <= 0:
        return _DEFAULT_SPEC_FORMAT
    ext = name[ext_idx:]
    if ext == ".json":
        return "json"
    if ext in (".yml", ".yaml"):
        return "yaml"

    raise SpecParseError(f"unrecognised extension {ext!r}", path=path)


def read_spec(path: str) -> Dict[str, Any]:
    format = _infer_spec_format(path)
    try:
        with open(path) as fp:
            if format == "json":
                raw = json.load(fp)
            else:
                raw = yaml.load(fp, Loader=yaml.SafeLoader)
    except OSError as exc:
        raise SpecParseError(exc.strerror or str(exc), path=path) from exc
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise SpecParseError(f"malformed {format}: {exc}", path=path) from exc
    if not isinstance(raw, dict):
        raise SpecParseError("spec must be a mapping with a 'type' key", path=path)
    return raw


def _parse(model: Any, raw: Dict[str, Any], path: Optional[str] = None) -> Any:
    try:
        return model.validate(raw)
    except PropositionError:
        raise
    except (ValidationError, ValueError, TypeError, InputError) as exc:
        raise SpecParseError(str(exc), path=path) from exc


def parse_function(raw: Dict[str, Any], path: Optional[str] = None) -> BaseFunction:
    """
    Builds a function expression from a spec mapping such as {"type": "exp", "arg": {"type": "identity"}}.

    :raises PropositionError: If a product or composition has a factor which is not slice preserving.
    :raises SpecParseError: If the mapping does not describe a function.
    """
    function = _parse(BaseFunction, raw, path)
    logger.debug(f"parsed function {function}")
    return function


def parse_domain(raw: Dict[str, Any], path: Optional[str] = None) -> BaseDomain:
    """
    Builds a domain from a spec mapping such as {"type": "cone", "phi": 1.5707963267948966}.

    :raises SpecParseError: If the mapping does not describe a domain or its profiles are inconsistent.
    """
    domain = _parse(BaseDomain, raw, path)
    logger.debug(f"parsed domain {domain}")
    return domain


def load_function(path: str) -> BaseFunction:
    return parse_function(read_spec(path), path=path)


def load_domain(path: str) -> BaseDomain:
    return parse_domain(read_spec(path), path=path)
