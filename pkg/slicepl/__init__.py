from slicepl.config import Config  # noqa
from slicepl.models.domain import BaseDomain  # noqa
from slicepl.models.function import BaseFunction  # noqa
from slicepl.models.quaternion import Quaternion, UnitImaginary  # noqa
from slicepl.specs import load_domain, load_function  # noqa
