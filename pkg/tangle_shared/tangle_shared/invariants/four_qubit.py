import math

import numpy as np

from tangle_shared.config import settings
from tangle_shared.constants import FOUR_QUBITS
from tangle_shared.exceptions import UnnormalizedStateError
from tangle_shared.invariants.three_qubit import ThreeQubitInvariants
from tangle_shared.qubits.state import StateVector, require_qubits


def i48_from(inv: ThreeQubitInvariants) -> complex:
    return 3 * inv.t**2 + inv.i3_0 * inv.i3_1 - 4 * inv.p_0 * inv.p_1


def j_from(inv: ThreeQubitInvariants) -> complex:
    matrix = np.array(
        [
            [inv.i3_1, inv.p_1, inv.t],
            [inv.p_1, inv.t, inv.p_0],
            [inv.t, inv.p_0, inv.i3_0],
        ],
        dtype=np.complex128,
    )
    return complex(np.linalg.det(matrix))


def i48(state: StateVector) -> complex:
    """Degree eight invariant 3T^2 + (I3)_0 (I3)_1 - 4 P_0 P_1."""
    require_qubits(state, FOUR_QUBITS)
    return i48_from(ThreeQubitInvariants.from_state(state))


def j_invariant(state: StateVector) -> complex:
    """Degree twelve invariant det[[(I3)_1, P_1, T], [P_1, T, P_0], [T, P_0, (I3)_0]]."""
    require_qubits(state, FOUR_QUBITS)
    return j_from(ThreeQubitInvariants.from_state(state))


def discriminant(state: StateVector) -> complex:
    require_qubits(state, FOUR_QUBITS)
    inv = ThreeQubitInvariants.from_state(state)
    return i48_from(inv) ** 3 - 27 * j_from(inv) ** 2


def tau4_from_i48(value: complex) -> float:
    """4|(12 I)^(1/2)|; the modulus makes the square root branch irrelevant."""
    return 4 * math.sqrt(12 * abs(value))


def tau4(state: StateVector) -> float:
    require_qubits(state, FOUR_QUBITS)
    if not state.is_normalized(settings.NORM_TOLERANCE):
        raise UnnormalizedStateError(
            f'four tangle needs a normalized state, norm squared is {state.norm_squared}'
        )
    return tau4_from_i48(i48(state))
