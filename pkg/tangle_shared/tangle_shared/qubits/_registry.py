from typing import TYPE_CHECKING, Type

if TYPE_CHECKING:
    from tangle_shared.qubits.builtin import AbstractBuiltinState


class BuiltinStateRegistry(type):
    REGISTRY: dict[str, type['AbstractBuiltinState']] = {}

    def __new__(
        mcs: Type['BuiltinStateRegistry'],
        name: str,
        bases: tuple[type],
        attrs: dict,
    ) -> type['AbstractBuiltinState']:
        state_cls: type['AbstractBuiltinState'] = type.__new__(mcs, name, bases, attrs)
        if attrs.get('NAME') is not None:
            mcs.REGISTRY[attrs['NAME']] = state_cls
        return state_cls

    @classmethod
    def get_registry(mcs) -> dict[str, type['AbstractBuiltinState']]:
        return mcs.REGISTRY.copy()
