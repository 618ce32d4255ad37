from tangle_shared.qubits.builtin import builtin_state
from tangle_shared.qubits.operators import LocalOperator, apply_local, u_of_y
from tangle_shared.qubits.permutation import QubitPermutation, permute_qubits
from tangle_shared.qubits.sampling import random_state, random_su2, random_u2
from tangle_shared.qubits.state import StateVector, make_state, normalized

__all__ = [
    'LocalOperator',
    'QubitPermutation',
    'StateVector',
    'apply_local',
    'builtin_state',
    'make_state',
    'normalized',
    'permute_qubits',
    'random_state',
    'random_su2',
    'random_u2',
    'u_of_y',
]
