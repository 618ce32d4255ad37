"""Dense pure states of three or four qubits.

Amplitude a_{i1 i2 i3 i4} lives at flat index i1*8 + i2*4 + i3*2 + i4, i.e. A1 is
the most significant bit. The same big-endian order is used in state files.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from tangle_shared.constants import SUPPORTED_QUBIT_COUNTS
from tangle_shared.exceptions import InvalidStateError, QubitCountError

_log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StateVector:
    n_qubits: int
    amplitudes: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n_qubits not in SUPPORTED_QUBIT_COUNTS:
            raise QubitCountError(
                f'n_qubits must be one of {SUPPORTED_QUBIT_COUNTS}, got {self.n_qubits}'
            )
        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        expected = 2**self.n_qubits
        if amplitudes.size != expected:
            raise InvalidStateError(
                f'expected {expected} amplitudes for {self.n_qubits} qubits, '
                f'got {amplitudes.size}'
            )
        if not np.all(np.isfinite(amplitudes)):
            raise InvalidStateError('all amplitudes must be finite (no NaN/Inf)')
        amplitudes.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amplitudes)

    def __getitem__(self, bits: str | int) -> complex:
        """Amplitude by bit string (``'0101'``) or flat index."""
        if isinstance(bits, str):
            if len(bits) != self.n_qubits or set(bits) - {'0', '1'}:
                raise IndexError(f'"{bits}" is not a {self.n_qubits}-bit string')
            bits = int(bits, 2)
        return complex(self.amplitudes[bits])

    @property
    def tensor(self) -> NDArray[np.complex128]:
        """Read-only view with one axis of length 2 per qubit, A1 first."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    @property
    def is_degenerate(self) -> bool:
        """All-zero state: every homogeneous invariant of it vanishes."""
        return not np.any(self.amplitudes)

    def is_normalized(self, tolerance: float) -> bool:
        return abs(self.norm_squared - 1.0) <= tolerance

    def scaled(self, factor: complex) -> 'StateVector':
        return StateVector(self.n_qubits, factor * self.amplitudes)

    def with_tensor(self, tensor: ArrayLike) -> 'StateVector':
        return StateVector(self.n_qubits, np.asarray(tensor).reshape(-1))

    def allclose(self, other: 'StateVector', atol: float = 1e-12) -> bool:
        return self.n_qubits == other.n_qubits and np.allclose(
            self.amplitudes, other.amplitudes, rtol=0.0, atol=atol
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n_qubits == other.n_qubits and np.array_equal(
            self.amplitudes, other.amplitudes
        )

    __hash__ = None


def make_state(n_qubits: int, amplitudes: ArrayLike) -> StateVector:
    state = StateVector(n_qubits=n_qubits, amplitudes=amplitudes)
    if state.is_degenerate:
        _log.warning('All-zero %d-qubit state: every invariant of it is 0', n_qubits)
    return state


def normalized(state: StateVector) -> tuple[StateVector, float]:
    """Return the unit-norm state and the original norm."""
    norm = float(np.sqrt(state.norm_squared))
    if norm == 0.0:
        raise InvalidStateError('cannot normalize the all-zero (degenerate) state')
    return state.scaled(1.0 / norm), norm


def require_qubits(state: StateVector, n_qubits: int) -> None:
    if state.n_qubits != n_qubits:
        raise QubitCountError(
            f'expected a {n_qubits}-qubit state, got {state.n_qubits} qubits'
        )
