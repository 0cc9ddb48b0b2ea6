from abc import ABC, abstractmethod
from typing import Any, Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, Extra, PrivateAttr

from slicepl import kernels
from slicepl.errors import FunctionDomainError
from slicepl.models.quaternion import Quaternion, QuaternionLike
from slicepl.utils.registry import Registry


class BaseFunction(BaseModel, ABC):
    """
    A node of a slice regular function expression.

    Nodes are immutable. `evaluate` is vectorised over arrays of quaternions of shape (..., 4) and returns NaN rows
    for points outside the node's domain. The structural flags are computed once, when the node is built.
    """

    type: str

    _slice_preserving: bool = PrivateAttr(False)
    _entire: bool = PrivateAttr(True)
    _truncated: bool = PrivateAttr(False)

    class Config:
        extra = Extra.forbid
        frozen = True
        copy_on_model_validation = "none"

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        self._slice_preserving = self.structurally_slice_preserving()
        self._entire = self.structurally_entire()
        self._truncated = self.structurally_truncated()

    @classmethod
    def validate(cls, value: Any) -> "BaseFunction":
        """
        Accepts built nodes as they are and builds spec mappings through the registry, so that fields typed as
        the abstract base can hold any registered node.
        """
        if isinstance(value, cls):
            return value
        if not isinstance(value, dict):
            raise TypeError(f"expected a function node or spec mapping, got {value!r}")
        try:
            member = FunctionRegistry.lookup(value.get("type"))
        except KeyError as exc:
            raise ValueError(exc.args[0]) from exc
        if not issubclass(member, cls):
            raise ValueError(f"{member.__name__} is not a {cls.__name__}")
        return member(**value)

    @abstractmethod
    def evaluate(self, q: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def structurally_slice_preserving(self) -> bool:
        """
        True only when slice preservation follows from the structure of the expression: real coefficients and
        constants, or sums, products and compositions of slice preserving nodes.
        """
        ...

    def structurally_entire(self) -> bool:
        return all(child.entire for child in self.children)

    def structurally_truncated(self) -> bool:
        return any(child.truncated for child in self.children)

    @property
    def children(self) -> List["BaseFunction"]:
        return []

    @property
    def slice_preserving(self) -> bool:
        return self._slice_preserving

    @property
    def entire(self) -> bool:
        """ True when the node is defined on all of ℍ. """
        return self._entire

    @property
    def truncated(self) -> bool:
        """ True when some power series in the tree stands for a longer series cut off at its degree. """
        return self._truncated

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        """
        ln|f(q)|. Nodes override this where it can be had without forming f(q), which keeps exponential growth
        from overflowing.
        """
        return kernels.log_abs(self.evaluate(q))

    def modulus(self, q: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            return np.exp(self.log_modulus(q))

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type}

    def __call__(self, q: QuaternionLike) -> Quaternion:
        """
        Evaluates the function at a single point.

        :raises FunctionDomainError: If the point is outside the domain of some node.
        """
        q = Quaternion.coerce(q)
        value = self.evaluate(q.array)
        if np.isnan(value).any():
            node = self.locate_domain_error(q.array)
            raise FunctionDomainError(
                f"{node.type} node is undefined at {q}", node=node, value=q
            )
        return Quaternion.from_array(value)

    def child_points(self, q: np.ndarray) -> List[Tuple["BaseFunction", np.ndarray]]:
        """ Pairs of (child, point the child is evaluated at). """
        return [(child, q) for child in self.children]

    def locate_domain_error(self, q: np.ndarray) -> "BaseFunction":
        """
        Returns the deepest node which fails at q although its children succeed.
        """
        for child, point in self.child_points(q):
            if np.isnan(child.evaluate(point)).any():
                return child.locate_domain_error(point)
        return self

    def __str__(self) -> str:
        return repr(self.to_spec())


FunctionRegistry = Registry(BaseFunction)
function_node = FunctionRegistry.member
