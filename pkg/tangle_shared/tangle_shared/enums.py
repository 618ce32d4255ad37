import sys
from enum import unique

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # pragma: no cover - Python 3.10 fallback mirroring enum.StrEnum
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()


@unique
class StrChoiceEnum(StrEnum):
    @classmethod
    def choices(cls) -> tuple[str, ...]:
        return tuple(x.value for x in cls)


class QubitLabel(StrChoiceEnum):
    A1 = 'A1'
    A2 = 'A2'
    A3 = 'A3'
    A4 = 'A4'

    @property
    def position(self) -> int:
        """Tensor axis of the qubit, A1 being the most significant bit."""
        return int(self.value[1:]) - 1

    @classmethod
    def for_qubits(cls, n_qubits: int) -> tuple['QubitLabel', ...]:
        return tuple(cls)[:n_qubits]


class BuiltinStateName(StrChoiceEnum):
    GHZ4 = 'ghz4'
    W4 = 'w4'
    CLUSTER4 = 'cluster4'
    PRODUCT4 = 'product4'
    GHZ3 = 'ghz3'


class FontKind(StrChoiceEnum):
    TWO_WAY = 'two_way'
    THREE_WAY_SPECTATOR_A3 = 'three_way_spectator_A3'
    THREE_WAY_SPECTATOR_A4 = 'three_way_spectator_A4'
    FOUR_WAY = 'four_way'


class CheckSuite(StrChoiceEnum):
    TRANSFORMATION = 'transformation'
    LU = 'lu'
    HOMOGENEITY = 'homogeneity'
    CROSS_TRIPLE = 'cross_triple'


class UnitaryGroup(StrChoiceEnum):
    SPECIAL_UNITARY = 'special_unitary'
    UNITARY = 'unitary'


class OutputFormat(StrChoiceEnum):
    TEXT = 'text'
    JSON = 'json'


class Provenance(StrChoiceEnum):
    """How a catalogued value is known."""

    DERIVED = 'DERIVED'
    TRIVIAL = 'TRIVIAL'
