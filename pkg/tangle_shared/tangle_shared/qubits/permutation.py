from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from tangle_shared.enums import QubitLabel
from tangle_shared.exceptions import InvalidPermutationError
from tangle_shared.qubits.state import StateVector


@dataclass(frozen=True)
class QubitPermutation:
    """Relabeling of qubits: the qubit called ``key`` becomes ``mapping[key]``."""

    mapping: Mapping[QubitLabel, QubitLabel]

    def __post_init__(self) -> None:
        mapping = {QubitLabel(k): QubitLabel(v) for k, v in self.mapping.items()}
        labels = QubitLabel.for_qubits(len(mapping))
        if set(mapping) != set(labels) or set(mapping.values()) != set(labels):
            raise InvalidPermutationError(
                f'mapping must be a bijection on {", ".join(labels)}'
            )
        object.__setattr__(self, 'mapping', MappingProxyType(mapping))

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.mapping.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QubitPermutation):
            return NotImplemented
        return dict(self.mapping) == dict(other.mapping)

    @property
    def n_qubits(self) -> int:
        return len(self.mapping)

    def inverse(self) -> 'QubitPermutation':
        return QubitPermutation({v: k for k, v in self.mapping.items()})

    @classmethod
    def identity(cls, n_qubits: int) -> 'QubitPermutation':
        return cls({label: label for label in QubitLabel.for_qubits(n_qubits)})

    @classmethod
    def swap(cls, first: QubitLabel, second: QubitLabel, n_qubits: int = 4) -> 'QubitPermutation':
        mapping = {label: label for label in QubitLabel.for_qubits(n_qubits)}
        mapping[QubitLabel(first)], mapping[QubitLabel(second)] = (
            QubitLabel(second),
            QubitLabel(first),
        )
        return cls(mapping)

    @classmethod
    def to_last(cls, distinguished: QubitLabel, n_qubits: int = 4) -> 'QubitPermutation':
        """Move ``distinguished`` into the last slot, others keep their relative order."""
        try:
            distinguished = QubitLabel(distinguished)
        except ValueError:
            raise InvalidPermutationError(
                f'invalid qubit label "{distinguished}"'
            ) from None
        labels = QubitLabel.for_qubits(n_qubits)
        if distinguished not in labels:
            raise InvalidPermutationError(
                f'{distinguished} is not a qubit of a {n_qubits}-qubit state'
            )
        order = [label for label in labels if label is not distinguished]
        order.append(distinguished)
        return cls({old: new for old, new in zip(order, labels)})


def permute_qubits(state: StateVector, perm: QubitPermutation) -> StateVector:
    if perm.n_qubits != state.n_qubits:
        raise InvalidPermutationError(
            f'permutation acts on {perm.n_qubits} qubits, state has {state.n_qubits} qubits'
        )
    source_of = {new: old for old, new in perm.mapping.items()}
    axes = [source_of[label].position for label in QubitLabel.for_qubits(state.n_qubits)]
    return state.with_tensor(np.transpose(state.tensor, axes))
