"""Catalog of named fixture states with their known tangles."""

import numpy as np

from tangle_shared.enums import BuiltinStateName, Provenance
from tangle_shared.exceptions import UnknownBuiltinStateError
from tangle_shared.qubits._registry import BuiltinStateRegistry
from tangle_shared.qubits.state import StateVector, make_state


class AbstractBuiltinState(metaclass=BuiltinStateRegistry):
    NAME: BuiltinStateName | None = None
    N_QUBITS: int = 4
    DESCRIPTION: str = ''
    # Basis bit string -> unnormalized amplitude.
    TERMS: dict[str, complex] = {}
    # Tangle name ('tau4' or 'tau3') -> (value, provenance).
    KNOWN_TANGLES: dict[str, tuple[float, Provenance]] = {}

    @classmethod
    def build(cls) -> StateVector:
        amplitudes = np.zeros(2**cls.N_QUBITS, dtype=np.complex128)
        for bits, value in cls.TERMS.items():
            amplitudes[int(bits, 2)] = value
        amplitudes /= np.linalg.norm(amplitudes)
        return make_state(cls.N_QUBITS, amplitudes)


class Ghz4State(AbstractBuiltinState):
    NAME = BuiltinStateName.GHZ4
    DESCRIPTION = '(|0000> + |1111>)/sqrt(2)'
    TERMS = {'0000': 1, '1111': 1}
    KNOWN_TANGLES = {'tau4': (1.0, Provenance.DERIVED)}


class W4State(AbstractBuiltinState):
    NAME = BuiltinStateName.W4
    DESCRIPTION = '(|0001> + |0010> + |0100> + |1000>)/2'
    TERMS = {'0001': 1, '0010': 1, '0100': 1, '1000': 1}
    KNOWN_TANGLES = {'tau4': (0.0, Provenance.DERIVED)}


class Cluster4State(AbstractBuiltinState):
    NAME = BuiltinStateName.CLUSTER4
    DESCRIPTION = '(|0000> + |0011> + |1100> - |1111>)/2'
    TERMS = {'0000': 1, '0011': 1, '1100': 1, '1111': -1}
    KNOWN_TANGLES = {'tau4': (1.0, Provenance.DERIVED)}


class Product4State(AbstractBuiltinState):
    NAME = BuiltinStateName.PRODUCT4
    DESCRIPTION = '|0000>'
    TERMS = {'0000': 1}
    KNOWN_TANGLES = {'tau4': (0.0, Provenance.TRIVIAL)}


class Ghz3State(AbstractBuiltinState):
    NAME = BuiltinStateName.GHZ3
    N_QUBITS = 3
    DESCRIPTION = '(|000> + |111>)/sqrt(2)'
    TERMS = {'000': 1, '111': 1}
    KNOWN_TANGLES = {'tau3': (1.0, Provenance.DERIVED)}


def get_builtin_cls(name: str) -> type[AbstractBuiltinState]:
    try:
        return BuiltinStateRegistry.get_registry()[BuiltinStateName(name)]
    except ValueError:
        raise UnknownBuiltinStateError(
            f'unknown builtin state "{name}", choose one of '
            f'{", ".join(BuiltinStateName.choices())}'
        ) from None


def builtin_state(name: BuiltinStateName | str) -> StateVector:
    return get_builtin_cls(name).build()
