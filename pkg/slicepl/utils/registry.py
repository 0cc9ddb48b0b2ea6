from typing import Any, Callable, Dict, Generic, Type, TypeVar

from ordered_set import OrderedSet
from pydantic.main import BaseModel

T = TypeVar("T", bound=BaseModel)


class Registry(Generic[T]):
    """
    An ordered collection of concrete model types sharing a base, keyed by the default of their `type` field.

    Spec files refer to registered members by that tag, e.g. {"type": "exp", ...}.
    """

    def __init__(self, base: Type[T], key: str = "type") -> None:
        self._base = base
        self._key = key
        self._members: OrderedSet[Type[T]] = OrderedSet()

    def tag(self, member: Type[T]) -> str:
        field = member.__fields__.get(self._key)
        if field is None or not isinstance(field.default, str):
            raise TypeError(f"{member.__name__} has no default {self._key!r} tag")
        return field.default

    def register(self, *types: Type[T]) -> None:
        """
        Registers one or more new members.

        Members registered later shadow earlier members with the same tag.
        """
        for type in types:
            if not issubclass(type, self._base):
                raise TypeError(
                    f"{type.__name__} is not a subclass of {self._base.__name__}"
                )
            self._members.add(type)

    def unregister(self, *types: Type[T]) -> None:
        for type in types:
            if type in self._members:
                self._members.remove(type)

    def member(self) -> Callable[[Type[T]], Type[T]]:
        def _decorator(member_cls: Type[T]) -> Type[T]:
            self.register(member_cls)
            return member_cls

        return _decorator

    def tags(self) -> Dict[str, Type[T]]:
        return {self.tag(member): member for member in self._members}

    def lookup(self, tag: Any) -> Type[T]:
        members = self.tags()
        if tag not in members:
            known = ", ".join(sorted(members))
            raise KeyError(f"unknown {self._key} {tag!r}; expected one of: {known}")
        return members[tag]

    def __contains__(self, tag: Any) -> bool:
        return tag in self.tags()

    def __len__(self) -> int:
        return len(self._members)
