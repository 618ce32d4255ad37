from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from numpy.typing import NDArray

from tangle_shared.enums import QubitLabel
from tangle_shared.exceptions import InvalidOperatorError
from tangle_shared.qubits.state import StateVector


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """A 2x2 complex matrix acting on one named qubit."""

    entries: NDArray[np.complex128] = field(repr=False)
    target: QubitLabel

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape != (2, 2):
            raise InvalidOperatorError(f'operator must be 2x2, got {entries.shape}')
        if not np.all(np.isfinite(entries)):
            raise InvalidOperatorError('operator entries must be finite')
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'target', QubitLabel(self.target))

    @property
    def determinant(self) -> complex:
        return complex(np.linalg.det(self.entries))

    def dagger(self) -> 'LocalOperator':
        return LocalOperator(self.entries.conj().T, self.target)


def u_of_y(y: complex, target: QubitLabel = QubitLabel.A4) -> LocalOperator:
    """(1/sqrt(1+|y|^2)) [[1, -y*], [y, 1]], a determinant-one unitary."""
    y = complex(y)
    prefactor = 1.0 / np.sqrt(1.0 + abs(y) ** 2)
    matrix = prefactor * np.array([[1.0, -y.conjugate()], [y, 1.0]], dtype=np.complex128)
    return LocalOperator(matrix, target)


def apply_local(state: StateVector, op: LocalOperator) -> StateVector:
    """Contract the operator with the target qubit index: a'_i = sum_j M_ij a_j."""
    if op.target not in QubitLabel.for_qubits(state.n_qubits):
        raise InvalidOperatorError(
            f'target {op.target} is out of range for a {state.n_qubits}-qubit state'
        )
    axis = op.target.position
    contracted = np.tensordot(op.entries, state.tensor, axes=([1], [axis]))
    return state.with_tensor(np.moveaxis(contracted, 0, axis))


def apply_locals(state: StateVector, ops: Iterable[LocalOperator]) -> StateVector:
    for op in ops:
        state = apply_local(state, op)
    return state
