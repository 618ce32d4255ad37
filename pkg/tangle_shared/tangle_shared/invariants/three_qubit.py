"""Three-qubit invariants of A1A2A3 with A4 as the fourth qubit.

(I3)_(A4)i4 is the hyperdeterminant of the A4 = i4 slice. P_(A4)0, T and P_(A4)1 are
the mixed terms that appear when a unitary on A4 mixes the two slices.
"""

from dataclasses import dataclass

import numpy as np

from tangle_shared.config import settings
from tangle_shared.constants import BITS, FOUR_QUBITS, THREE_QUBITS
from tangle_shared.exceptions import UnnormalizedStateError
from tangle_shared.invariants.fonts import (
    four_way_font,
    three_way_font_spectator_A3,
    three_way_font_spectator_A4,
    two_way_font,
)
from tangle_shared.qubits.state import StateVector, make_state, require_qubits


def _four_way_sum(state: StateVector) -> complex:
    """D^0000 + D^0001 + D^0010 + D^0011."""
    return sum(four_way_font(state, 0, i3, i4) for i3 in BITS for i4 in BITS)


def _spectator_a3_pair(state: StateVector, i3: int) -> complex:
    """D_(A3)i3^000 + D_(A3)i3^001."""
    return three_way_font_spectator_A3(state, i3, 0, 0) + three_way_font_spectator_A3(
        state, i3, 0, 1
    )


def _spectator_a4_pair(state: StateVector, i4: int) -> complex:
    """D_(A4)i4^000 + D_(A4)i4^001."""
    return three_way_font_spectator_A4(state, i4, 0, 0) + three_way_font_spectator_A4(
        state, i4, 0, 1
    )


def i3_spectator(state: StateVector, i4: int) -> complex:
    require_qubits(state, FOUR_QUBITS)
    difference = three_way_font_spectator_A4(state, i4, 0, 0) - three_way_font_spectator_A4(
        state, i4, 1, 0
    )
    return difference**2 - 4 * two_way_font(state, 0, i4) * two_way_font(state, 1, i4)


def t_invariant(state: StateVector) -> complex:
    require_qubits(state, FOUR_QUBITS)
    return (
        _four_way_sum(state) ** 2 / 6
        - 2 / 3 * _spectator_a3_pair(state, 0) * _spectator_a3_pair(state, 1)
        + _spectator_a4_pair(state, 0) * _spectator_a4_pair(state, 1) / 3
        - 2
        / 3
        * (
            two_way_font(state, 0, 0) * two_way_font(state, 1, 1)
            + two_way_font(state, 1, 0) * two_way_font(state, 0, 1)
        )
    )


def p_invariant(state: StateVector, i4: int) -> complex:
    require_qubits(state, FOUR_QUBITS)
    return _spectator_a4_pair(state, i4) * _four_way_sum(state) / 2 - (
        two_way_font(state, 1, i4) * _spectator_a3_pair(state, 0)
        + two_way_font(state, 0, i4) * _spectator_a3_pair(state, 1)
    )


@dataclass(frozen=True)
class ThreeQubitInvariants:
    """The five invariants {(I3)_0, (I3)_1, P_0, P_1, T} of A1A2A3."""

    i3_0: complex
    i3_1: complex
    p_0: complex
    p_1: complex
    t: complex

    @classmethod
    def from_state(cls, state: StateVector) -> 'ThreeQubitInvariants':
        return cls(
            i3_0=i3_spectator(state, 0),
            i3_1=i3_spectator(state, 1),
            p_0=p_invariant(state, 0),
            p_1=p_invariant(state, 1),
            t=t_invariant(state),
        )

    def as_dict(self) -> dict[str, complex]:
        return {
            'i3_0': self.i3_0,
            'i3_1': self.i3_1,
            'p_0': self.p_0,
            'p_1': self.p_1,
            't': self.t,
        }

    def moduli(self) -> dict[str, float]:
        return {name: abs(value) for name, value in self.as_dict().items()}


def embed_three_qubit(state: StateVector) -> StateVector:
    """Four-qubit state with A4 = |0>: a_i1i2i3 0 = b_i1i2i3, a_i1i2i3 1 = 0."""
    require_qubits(state, THREE_QUBITS)
    tensor = np.stack([state.tensor, np.zeros_like(state.tensor)], axis=-1)
    return make_state(FOUR_QUBITS, tensor.reshape(-1))


def tau3(state: StateVector) -> float:
    require_qubits(state, THREE_QUBITS)
    if not state.is_normalized(settings.NORM_TOLERANCE):
        raise UnnormalizedStateError(
            f'three tangle needs a normalized state, norm squared is {state.norm_squared}'
        )
    return 4 * abs(i3_spectator(embed_three_qubit(state), 0))
