"""State file: JSON with explicit [re, im] pairs.

Amplitudes are listed in big-endian index order, A1 being the most significant bit:

    {"version": 1, "n_qubits": 3, "label": "ghz3",
     "amplitudes": [[0.7071067811865475, 0.0], [0.0, 0.0], ..., [0.7071067811865475, 0.0]]}
"""

import math
from typing import Annotated, Literal

from pydantic import Field, field_validator, model_validator
from typing_extensions import Self

from tangle_shared.constants import STATE_FILE_VERSION, SUPPORTED_QUBIT_COUNTS
from tangle_shared.qubits.state import StateVector, make_state
from tangle_shared.schemas.base import RealBaseModel

ComplexPair = Annotated[list[float], Field(min_length=2, max_length=2)]


class StateFileSchema(RealBaseModel):
    version: Literal[1] = STATE_FILE_VERSION
    n_qubits: int
    amplitudes: list[ComplexPair]
    label: str | None = None

    @field_validator('n_qubits')
    @classmethod
    def validate_n_qubits(cls, value: int) -> int:
        if value not in SUPPORTED_QUBIT_COUNTS:
            raise ValueError(f'n_qubits must be one of {SUPPORTED_QUBIT_COUNTS}')
        return value

    @field_validator('amplitudes')
    @classmethod
    def validate_finite(cls, values: list[list[float]]) -> list[list[float]]:
        if not all(math.isfinite(number) for pair in values for number in pair):
            raise ValueError('all amplitude numbers must be finite')
        return values

    @model_validator(mode='after')
    def validate_amplitude_count(self) -> Self:
        expected = 2**self.n_qubits
        if len(self.amplitudes) != expected:
            raise ValueError(
                f'expected {expected} amplitudes for {self.n_qubits} qubits, '
                f'got {len(self.amplitudes)}'
            )
        return self

    def to_state(self) -> StateVector:
        return make_state(self.n_qubits, [complex(re, im) for re, im in self.amplitudes])

    @classmethod
    def from_state(cls, state: StateVector, label: str | None = None) -> 'StateFileSchema':
        return cls(
            n_qubits=state.n_qubits,
            amplitudes=[[value.real, value.imag] for value in state.amplitudes.tolist()],
            label=label,
        )
