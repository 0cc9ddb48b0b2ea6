from typing import Any, Dict, List, Literal, Tuple

import numpy as np
from pydantic import Field, validator

from slicepl import kernels
from slicepl.errors import COMPOSITION_PROPOSITION, PRODUCT_PROPOSITION
from slicepl.models.function import BaseFunction, function_node

from .unary import require_slice_preserving


@function_node()
class Sum(BaseFunction):
    """ f_1(q) + ... + f_n(q). """

    type: Literal["sum"] = "sum"
    terms: List[BaseFunction] = Field(..., min_items=1)

    @property
    def children(self) -> List[BaseFunction]:
        return list(self.terms)

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        total = self.terms[0].evaluate(q)
        for term in self.terms[1:]:
            total = total + term.evaluate(q)
        return total

    def structurally_slice_preserving(self) -> bool:
        return all(term.slice_preserving for term in self.terms)

    def to_spec(self) -> Dict[str, Any]:
        return {"type": self.type, "terms": [term.to_spec() for term in self.terms]}


@function_node()
class Product(BaseFunction):
    """
    The pointwise product f(q)·g(q), slice regular because the left factor f is slice preserving.
    """

    type: Literal["product"] = "product"
    left: BaseFunction
    right: BaseFunction

    @validator("left")
    def _left_slice_preserving(cls, left: BaseFunction) -> BaseFunction:
        return require_slice_preserving(left, PRODUCT_PROPOSITION, "left factor")

    @property
    def children(self) -> List[BaseFunction]:
        return [self.left, self.right]

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return kernels.qmul(self.left.evaluate(q), self.right.evaluate(q))

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        return self.left.log_modulus(q) + self.right.log_modulus(q)

    def structurally_slice_preserving(self) -> bool:
        return self.left.slice_preserving and self.right.slice_preserving

    def to_spec(self) -> Dict[str, Any]:
        return {
            "type": self.type,
            "left": self.left.to_spec(),
            "right": self.right.to_spec(),
        }


@function_node()
class Compose(BaseFunction):
    """
    The composition g(f(q)), slice regular because the inner function f is slice preserving.
    """

    type: Literal["compose"] = "compose"
    outer: BaseFunction
    inner: BaseFunction

    @validator("inner")
    def _inner_slice_preserving(cls, inner: BaseFunction) -> BaseFunction:
        return require_slice_preserving(inner, COMPOSITION_PROPOSITION, "inner function")

    @property
    def children(self) -> List[BaseFunction]:
        return [self.inner, self.outer]

    def child_points(self, q: np.ndarray) -> List[Tuple[BaseFunction, np.ndarray]]:
        return [(self.inner, q), (self.outer, self.inner.evaluate(q))]

    def evaluate(self, q: np.ndarray) -> np.ndarray:
        return self.outer.evaluate(self.inner.evaluate(q))

    def log_modulus(self, q: np.ndarray) -> np.ndarray:
        return self.outer.log_modulus(self.inner.evaluate(q))

    def structurally_slice_preserving(self) -> bool:
        return self.outer.slice_preserving and self.inner.slice_preserving

    def to_spec(self) -> Dict[str, Any]:
        return {
            "type": self.type,
            "outer": self.outer.to_spec(),
            "inner": self.inner.to_spec(),
        }
