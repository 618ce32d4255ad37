import numpy as np

from tangle_shared.config import settings
from tangle_shared.enums import CheckSuite
from tangle_shared.invariants.quartic import transformed_i3
from tangle_shared.invariants.three_qubit import i3_spectator
from tangle_shared.qubits.operators import apply_local, u_of_y
from tangle_shared.qubits.sampling import sample_disk
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.outcome import ToleranceConfig
from tangle_shared.verify.abstract import AbstractCheck, TrialResult
from tangle_shared.verify.residual import residual


class TransformationLawCheck(AbstractCheck):
    """(I3)_(A4)0 recomputed after u_of_y(y) on A4 against the quartic in y*."""

    NAME = CheckSuite.TRANSFORMATION
    # The first trials use these values of y, the rest sample the disk.
    FIXED_Y = (0j, 1 + 0j, 1j, 1 + 1j)

    def __init__(
        self,
        trials: int,
        seed: int,
        tol: ToleranceConfig | None = None,
        state: StateVector | None = None,
        y: complex | None = None,
    ) -> None:
        super().__init__(trials=trials, seed=seed, tol=tol, state=state)
        self._y = y

    def _run_trial(self, trial: int, rng: np.random.Generator) -> TrialResult:
        state = self._trial_state(rng)
        y = self._trial_y(trial, rng)
        lhs = i3_spectator(apply_local(state, u_of_y(y)), 0)
        rhs = transformed_i3(state, y)
        return TrialResult(residual(lhs, rhs, self._tol.abs_floor))

    def _trial_y(self, trial: int, rng: np.random.Generator) -> complex:
        if self._y is not None:
            return complex(self._y)
        if trial < len(self.FIXED_Y):
            return self.FIXED_Y[trial]
        return sample_disk(rng, settings.Y_SAMPLING_RADIUS)
