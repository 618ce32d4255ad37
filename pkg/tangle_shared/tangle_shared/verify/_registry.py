from abc import ABCMeta
from typing import TYPE_CHECKING, Type

from tangle_shared.enums import CheckSuite

if TYPE_CHECKING:
    from tangle_shared.verify.abstract import AbstractCheck


class CheckRegistry(ABCMeta):
    REGISTRY: dict[CheckSuite, type['AbstractCheck']] = {}

    def __new__(
        mcs: Type['CheckRegistry'],
        name: str,
        bases: tuple[type],
        attrs: dict,
    ) -> type['AbstractCheck']:
        check_cls: type['AbstractCheck'] = type.__new__(mcs, name, bases, attrs)
        if attrs.get('NAME') is not None:
            mcs.REGISTRY[attrs['NAME']] = check_cls
        return check_cls

    @classmethod
    def get_registry(mcs) -> dict[CheckSuite, type['AbstractCheck']]:
        return mcs.REGISTRY.copy()
