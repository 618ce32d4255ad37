from abc import abstractmethod
from concurrent.futures import Executor
from typing import NamedTuple

import numpy as np

from tangle_shared.constants import FOUR_QUBITS
from tangle_shared.enums import CheckSuite
from tangle_shared.exceptions import InvalidTrialsError
from tangle_shared.qubits.sampling import sample_state, trial_rng
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.outcome import CheckOutcome, ToleranceConfig
from tangle_shared.utils.common import wrap
from tangle_shared.utils.tasks.abstract import AbstractTask
from tangle_shared.verify._registry import CheckRegistry


class TrialResult(NamedTuple):
    residual: float
    # Statistics recorded but never asserted.
    reported: dict[str, float] = {}


class AbstractCheck(AbstractTask, metaclass=CheckRegistry):
    """Runs ``trials`` independent trials and reports the worst residual.

    Trial ``k`` draws from a generator seeded with ``(seed, k)``, so the outcome is
    reproducible and independent of execution order.
    """

    NAME: CheckSuite | None = None

    def __init__(
        self,
        trials: int,
        seed: int,
        tol: ToleranceConfig | None = None,
        state: StateVector | None = None,
    ) -> None:
        super().__init__()
        if trials < 1:
            raise InvalidTrialsError(f'trials ≥ 1 required, got {trials}')
        self._trials = trials
        self._seed = seed
        self._tol = tol or ToleranceConfig()
        self._state = state

    async def run(self, executor: Executor | None = None) -> CheckOutcome:
        return await wrap(self.run_sync)(executor=executor)

    def run_sync(self) -> CheckOutcome:
        self._log.info(
            'Running %s: %d trial(s), seed %d', self.name, self._trials, self._seed
        )
        results = [
            self._run_trial(trial, trial_rng(self._seed, trial))
            for trial in range(self._trials)
        ]
        residuals = [result.residual for result in results]
        worst = int(np.argmax(residuals))
        reported: dict[str, float] = {}
        for result in results:
            for key, value in result.reported.items():
                reported[key] = max(reported.get(key, 0.0), value)

        outcome = CheckOutcome(
            name=self.NAME,
            trials=self._trials,
            max_residual=residuals[worst],
            passed=bool(residuals[worst] <= self._threshold),
            seed=self._seed,
            worst_trial=worst,
            reported=reported,
        )
        if outcome.passed:
            self._log.info('%s passed, max residual %.3e', self.name, outcome.max_residual)
        else:
            self._log.warning(
                '%s failed: residual %.3e at trial %d (seed %d) exceeds %.1e',
                self.name,
                outcome.max_residual,
                worst,
                self._seed,
                self._threshold,
            )
        return outcome

    @property
    def _threshold(self) -> float:
        return self._tol.rel

    def _trial_state(self, rng: np.random.Generator) -> StateVector:
        if self._state is not None:
            return self._state
        return sample_state(rng, FOUR_QUBITS)

    @abstractmethod
    def _run_trial(self, trial: int, rng: np.random.Generator) -> TrialResult:
        pass
