"""Negativity fonts: 2x2 determinants of four-qubit amplitudes.

Every font pairs the A1 = 0 and A1 = 1 rows. The first column holds the amplitudes
at the font's own indices, the second column flips every index that is neither A1
nor a spectator (index arithmetic is mod 2). With A1 fixed to 0, the superscript
lists the non-spectator indices in label order:

    two-way      D_(A3)i3(A4)i4^00   spectators A3, A4; flips A2
    three-way    D_(A3)i3^0 i2 i4    spectator A3;     flips A2, A4
    three-way    D_(A4)i4^0 i2 i3    spectator A4;     flips A2, A3
    four-way     D^0 i2 i3 i4        no spectator;     flips A2, A3, A4

Fonts are computed in the canonical labeling only; use ``permute_qubits`` first for
any other labeling.
"""

from itertools import product
from typing import Annotated

import numpy as np
from pydantic import Field, model_validator
from typing_extensions import Self

from tangle_shared.constants import BITS, FOUR_QUBITS
from tangle_shared.enums import FontKind
from tangle_shared.qubits.state import StateVector, require_qubits
from tangle_shared.schemas.base import StrictBaseConfigModel

Bit = Annotated[int, Field(ge=0, le=1)]

# Non-spectator qubits among A2..A4 (tensor axes 1..3) whose index is flipped.
_FLIPPED_AXES: dict[FontKind, tuple[int, ...]] = {
    FontKind.TWO_WAY: (1,),
    FontKind.THREE_WAY_SPECTATOR_A3: (1, 3),
    FontKind.THREE_WAY_SPECTATOR_A4: (1, 2),
    FontKind.FOUR_WAY: (1, 2, 3),
}
_N_SPECTATORS: dict[FontKind, int] = {
    FontKind.TWO_WAY: 2,
    FontKind.THREE_WAY_SPECTATOR_A3: 1,
    FontKind.THREE_WAY_SPECTATOR_A4: 1,
    FontKind.FOUR_WAY: 0,
}


class FontIndex(StrictBaseConfigModel):
    kind: Annotated[FontKind, Field(strict=False)]
    spectator_values: tuple[Bit, ...] = ()
    superscript_bits: tuple[Bit, ...] = ()

    @model_validator(mode='after')
    def validate_bits(self) -> Self:
        n_spectators = _N_SPECTATORS[self.kind]
        n_superscripts = 3 - n_spectators if self.kind is not FontKind.TWO_WAY else 0
        if len(self.spectator_values) != n_spectators:
            raise ValueError(
                f'{self.kind} font needs {n_spectators} spectator bit(s), '
                f'got {len(self.spectator_values)}'
            )
        if len(self.superscript_bits) != n_superscripts:
            raise ValueError(
                f'{self.kind} font needs {n_superscripts} superscript bit(s), '
                f'got {len(self.superscript_bits)}'
            )
        return self

    @property
    def indices(self) -> tuple[int, int, int]:
        """(i2, i3, i4) of the first column."""
        spec, sup = self.spectator_values, self.superscript_bits
        match self.kind:
            case FontKind.TWO_WAY:
                return 0, spec[0], spec[1]
            case FontKind.THREE_WAY_SPECTATOR_A3:
                return sup[0], spec[0], sup[1]
            case FontKind.THREE_WAY_SPECTATOR_A4:
                return sup[0], sup[1], spec[0]
            case FontKind.FOUR_WAY:
                return sup[0], sup[1], sup[2]
        raise ValueError(f'unknown font kind {self.kind}')

    @property
    def label(self) -> str:
        spec = self.spectator_values
        sup = ''.join(map(str, self.superscript_bits))
        match self.kind:
            case FontKind.TWO_WAY:
                return f'D_(A3){spec[0]}(A4){spec[1]}^00'
            case FontKind.THREE_WAY_SPECTATOR_A3:
                return f'D_(A3){spec[0]}^0{sup}'
            case FontKind.THREE_WAY_SPECTATOR_A4:
                return f'D_(A4){spec[0]}^0{sup}'
            case FontKind.FOUR_WAY:
                return f'D^0{sup}'
        raise ValueError(f'unknown font kind {self.kind}')


def font(state: StateVector, index: FontIndex) -> complex:
    require_qubits(state, FOUR_QUBITS)
    first = index.indices
    second = list(first)
    for axis in _FLIPPED_AXES[index.kind]:
        second[axis - 1] ^= 1
    tensor = state.tensor
    return complex(
        tensor[(0, *first)] * tensor[(1, *second)]
        - tensor[(0, *second)] * tensor[(1, *first)]
    )


def two_way_font(state: StateVector, i3: int, i4: int) -> complex:
    """D_(A3)i3(A4)i4^00 = a_00i3i4 a_11i3i4 - a_01i3i4 a_10i3i4."""
    return font(state, FontIndex(kind=FontKind.TWO_WAY, spectator_values=(i3, i4)))


def three_way_font_spectator_A3(state: StateVector, i3: int, i2: int, i4: int) -> complex:
    """D_(A3)i3^0 i2 i4, flipping A2 and A4."""
    return font(
        state,
        FontIndex(
            kind=FontKind.THREE_WAY_SPECTATOR_A3,
            spectator_values=(i3,),
            superscript_bits=(i2, i4),
        ),
    )


def three_way_font_spectator_A4(state: StateVector, i4: int, i2: int, i3: int) -> complex:
    """D_(A4)i4^0 i2 i3, flipping A2 and A3."""
    return font(
        state,
        FontIndex(
            kind=FontKind.THREE_WAY_SPECTATOR_A4,
            spectator_values=(i4,),
            superscript_bits=(i2, i3),
        ),
    )


def four_way_font(state: StateVector, i2: int, i3: int, i4: int) -> complex:
    """D^0 i2 i3 i4, flipping A2, A3 and A4."""
    return font(
        state, FontIndex(kind=FontKind.FOUR_WAY, superscript_bits=(i2, i3, i4))
    )


def iter_font_indices() -> list[FontIndex]:
    indices = [
        FontIndex(kind=FontKind.TWO_WAY, spectator_values=bits)
        for bits in product(BITS, repeat=2)
    ]
    for kind in (FontKind.THREE_WAY_SPECTATOR_A3, FontKind.THREE_WAY_SPECTATOR_A4):
        indices.extend(
            FontIndex(kind=kind, spectator_values=(spec,), superscript_bits=(b1, b2))
            for spec, b1, b2 in product(BITS, repeat=3)
        )
    indices.extend(
        FontIndex(kind=FontKind.FOUR_WAY, superscript_bits=bits)
        for bits in product(BITS, repeat=3)
    )
    return indices


def all_fonts(state: StateVector) -> dict[FontIndex, complex]:
    """Every font of the four families, 28 in total."""
    return {index: font(state, index) for index in iter_font_indices()}


def font_array(state: StateVector) -> np.ndarray:
    return np.array(list(all_fonts(state).values()), dtype=np.complex128)
