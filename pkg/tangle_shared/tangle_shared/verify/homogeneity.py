import numpy as np

from tangle_shared.config import settings
from tangle_shared.enums import CheckSuite
from tangle_shared.invariants.fonts import font_array
from tangle_shared.invariants.four_qubit import i48_from, j_from
from tangle_shared.invariants.three_qubit import ThreeQubitInvariants
from tangle_shared.qubits.sampling import sample_scale
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.outcome import ToleranceConfig
from tangle_shared.verify.abstract import AbstractCheck, TrialResult
from tangle_shared.verify.residual import max_residual

FONT_DEGREE = 2
THREE_QUBIT_DEGREE = 4
I48_DEGREE = 8
J_DEGREE = 12
DELTA_DEGREE = 24


def _invariant_values(state: StateVector) -> list[tuple[complex, int]]:
    inv = ThreeQubitInvariants.from_state(state)
    i48_value, j_value = i48_from(inv), j_from(inv)
    values = [(font, FONT_DEGREE) for font in font_array(state).tolist()]
    values.extend((value, THREE_QUBIT_DEGREE) for value in inv.as_dict().values())
    values.append((i48_value, I48_DEGREE))
    values.append((j_value, J_DEGREE))
    values.append((i48_value**3 - 27 * j_value**2, DELTA_DEGREE))
    return values


class HomogeneityCheck(AbstractCheck):
    """Scaling the amplitudes by c scales a degree-k invariant by c^k."""

    NAME = CheckSuite.HOMOGENEITY

    def __init__(
        self,
        trials: int,
        seed: int,
        tol: ToleranceConfig | None = None,
        state: StateVector | None = None,
        scale: complex | None = None,
    ) -> None:
        super().__init__(trials=trials, seed=seed, tol=tol, state=state)
        self._scale = scale

    def _run_trial(self, trial: int, rng: np.random.Generator) -> TrialResult:
        state = self._trial_state(rng)
        scale = self._trial_scale(rng)
        original = _invariant_values(state)
        scaled = _invariant_values(state.scaled(scale))
        pairs = [
            (scaled_value, scale**degree * value)
            for (value, degree), (scaled_value, _) in zip(original, scaled)
        ]
        return TrialResult(max_residual(pairs, self._tol.abs_floor))

    def _trial_scale(self, rng: np.random.Generator) -> complex:
        if self._scale is not None:
            return complex(self._scale)
        return sample_scale(
            rng, settings.SCALE_MIN_MODULUS, settings.SCALE_MAX_MODULUS
        )
