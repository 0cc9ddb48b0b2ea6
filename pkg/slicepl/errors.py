from typing import Any, Optional


class SliceplError(Exception):
    """
    Base class for all errors raised by slicepl.
    """


class QuaternionDomainError(SliceplError):
    """
    Raised when a quaternion lies outside the domain of an elementary function, e.g. the inverse of zero or the
    logarithm of a point on its cut.
    """

    def __init__(self, message: str, value: Any, excluded: str) -> None:
        super().__init__(message)
        self.value = value
        self.excluded = excluded


class FunctionDomainError(SliceplError):
    """
    Raised when a function expression is evaluated outside its domain; identifies the offending node.
    """

    def __init__(
        self, message: str, node: Any, value: Any, cause: Optional[Exception] = None
    ) -> None:
        super().__init__(message)
        self.node = node
        self.value = value
        self.cause = cause


class InputError(SliceplError):
    """
    Raised when user supplied parameters cannot be used, e.g. a non-orthogonal pair of imaginary units.
    """


class PropositionError(InputError):
    """
    Raised when a product or composition would not be slice regular because its slice preserving factor is not
    slice preserving.
    """

    def __init__(self, message: str, proposition: str) -> None:
        super().__init__(f"{message} (violates the {proposition})")
        self.proposition = proposition


class SpecParseError(InputError):
    """
    Raised when a function or domain spec file cannot be read or parsed.
    """

    def __init__(self, message: str, path: Optional[str] = None) -> None:
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class EmptyIntersectionError(InputError):
    """
    Raised when the sphere of a given radius does not meet the closure of a domain.
    """

    def __init__(self, message: str, radius: float) -> None:
        super().__init__(message)
        self.radius = radius


PRODUCT_PROPOSITION = "product proposition: the left factor of f·g must be slice preserving"
COMPOSITION_PROPOSITION = (
    "composition proposition: the inner function of g∘f must be slice preserving"
)
