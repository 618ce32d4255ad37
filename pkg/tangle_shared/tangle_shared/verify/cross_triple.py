import numpy as np

from tangle_shared.constants import FOUR_QUBITS
from tangle_shared.enums import CheckSuite, QubitLabel
from tangle_shared.invariants.four_qubit import i48_from, j_from
from tangle_shared.invariants.three_qubit import ThreeQubitInvariants
from tangle_shared.qubits.permutation import QubitPermutation, permute_qubits
from tangle_shared.qubits.state import StateVector
from tangle_shared.verify.abstract import AbstractCheck, TrialResult
from tangle_shared.verify.residual import relative_spread


def _relabeled_invariants(state: StateVector) -> list[ThreeQubitInvariants]:
    return [
        ThreeQubitInvariants.from_state(
            permute_qubits(state, QubitPermutation.to_last(label, FOUR_QUBITS))
        )
        for label in QubitLabel.for_qubits(FOUR_QUBITS)
    ]


class CrossTripleDeltaCheck(AbstractCheck):
    """The discriminant must not depend on which qubit plays A4.

    The spread of I48 over the four choices is recorded as ``i48_spread`` but not
    asserted. Both are plain polynomials, so the state need not be normalized.
    """

    NAME = CheckSuite.CROSS_TRIPLE

    @property
    def _threshold(self) -> float:
        return self._tol.invariance_rel

    def _run_trial(self, trial: int, rng: np.random.Generator) -> TrialResult:
        i48_values, deltas = [], []
        for inv in _relabeled_invariants(self._trial_state(rng)):
            i48_value = i48_from(inv)
            i48_values.append(i48_value)
            deltas.append(i48_value**3 - 27 * j_from(inv) ** 2)
        floor = self._tol.abs_floor
        return TrialResult(
            residual=relative_spread(deltas, floor),
            reported={'i48_spread': relative_spread(i48_values, floor)},
        )
