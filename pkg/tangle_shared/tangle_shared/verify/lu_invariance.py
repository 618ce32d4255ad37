from typing import Sequence

import numpy as np

from tangle_shared.constants import FOUR_QUBITS
from tangle_shared.enums import CheckSuite, QubitLabel, UnitaryGroup
from tangle_shared.invariants.four_qubit import i48_from, j_from, tau4_from_i48
from tangle_shared.invariants.three_qubit import ThreeQubitInvariants
from tangle_shared.qubits.operators import LocalOperator, apply_locals
from tangle_shared.qubits.sampling import sample_unitary
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.outcome import ToleranceConfig
from tangle_shared.verify.abstract import AbstractCheck, TrialResult
from tangle_shared.verify.residual import max_residual


class LocalUnitaryInvarianceCheck(AbstractCheck):
    """Independent local unitaries on all four qubits.

    Determinant-one unitaries must leave I48 and J unchanged; general unitaries only
    multiply them by a phase, so their moduli and tau4 are compared. Without an
    explicit ``group`` every trial covers both.
    """

    NAME = CheckSuite.LU

    def __init__(
        self,
        trials: int,
        seed: int,
        tol: ToleranceConfig | None = None,
        group: UnitaryGroup | None = None,
        state: StateVector | None = None,
        operators: Sequence[LocalOperator] | None = None,
    ) -> None:
        super().__init__(trials=trials, seed=seed, tol=tol, state=state)
        self._groups = (group,) if group else tuple(UnitaryGroup)
        self._operators = operators

    @property
    def _threshold(self) -> float:
        return self._tol.invariance_rel

    def _run_trial(self, trial: int, rng: np.random.Generator) -> TrialResult:
        state = self._trial_state(rng)
        before = ThreeQubitInvariants.from_state(state)
        pairs: list[tuple[complex, complex]] = []
        for group in self._groups:
            after_state = apply_locals(state, self._trial_operators(group, rng))
            after = ThreeQubitInvariants.from_state(after_state)
            pairs.extend(self._compare(group, before, after))
        return TrialResult(max_residual(pairs, self._tol.abs_floor))

    def _trial_operators(
        self, group: UnitaryGroup, rng: np.random.Generator
    ) -> Sequence[LocalOperator]:
        if self._operators is not None:
            return self._operators
        return [
            LocalOperator(sample_unitary(rng, group), label)
            for label in QubitLabel.for_qubits(FOUR_QUBITS)
        ]

    @staticmethod
    def _compare(
        group: UnitaryGroup, before: ThreeQubitInvariants, after: ThreeQubitInvariants
    ) -> list[tuple[complex, complex]]:
        i48_pair = i48_from(before), i48_from(after)
        j_pair = j_from(before), j_from(after)
        if group == UnitaryGroup.SPECIAL_UNITARY:
            return [i48_pair, j_pair]
        return [
            (abs(i48_pair[0]), abs(i48_pair[1])),
            (abs(j_pair[0]), abs(j_pair[1])),
            (tau4_from_i48(i48_pair[0]), tau4_from_i48(i48_pair[1])),
        ]
