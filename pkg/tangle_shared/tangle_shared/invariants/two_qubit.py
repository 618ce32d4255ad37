from typing import NamedTuple

from tangle_shared.constants import BITS, FOUR_QUBITS
from tangle_shared.invariants.fonts import (
    four_way_font,
    three_way_font_spectator_A3,
    three_way_font_spectator_A4,
    two_way_font,
)
from tangle_shared.qubits.state import StateVector, require_qubits


class TwoQubitInvariant(NamedTuple):
    label: str
    value: complex


def two_qubit_invariant_list(state: StateVector) -> list[TwoQubitInvariant]:
    """Two-qubit invariants of the pair A1A2, 14 values in five families.

    Only the raw fonts D_(A3)i3(A4)i4^00 are asserted to be invariant; the differences
    are reported as they are.
    """
    require_qubits(state, FOUR_QUBITS)
    invariants = [
        TwoQubitInvariant(f'D_(A3){i3}(A4){i4}^00', two_way_font(state, i3, i4))
        for i3 in BITS
        for i4 in BITS
    ]
    invariants.extend(
        TwoQubitInvariant(
            f'D_(A3){i3}^00{i4} - D_(A3){i3}^01{i4}',
            three_way_font_spectator_A3(state, i3, 0, i4)
            - three_way_font_spectator_A3(state, i3, 1, i4),
        )
        for i3 in BITS
        for i4 in BITS
    )
    invariants.extend(
        TwoQubitInvariant(
            f'D_(A4){i4}^00{i3} - D_(A4){i4}^01{i3}',
            three_way_font_spectator_A4(state, i4, 0, i3)
            - three_way_font_spectator_A4(state, i4, 1, i3),
        )
        for i4 in BITS
        for i3 in BITS
    )
    invariants.extend(
        TwoQubitInvariant(
            f'D^000{i4} - D^010{i4}',
            four_way_font(state, 0, 0, i4) - four_way_font(state, 1, 0, i4),
        )
        for i4 in BITS
    )
    return invariants
