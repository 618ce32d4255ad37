import logging
from dataclasses import dataclass, field

from tangle_shared.constants import FOUR_QUBITS
from tangle_shared.enums import QubitLabel
from tangle_shared.invariants.four_qubit import i48_from, j_from, tau4
from tangle_shared.invariants.three_qubit import ThreeQubitInvariants
from tangle_shared.invariants.two_qubit import TwoQubitInvariant, two_qubit_invariant_list
from tangle_shared.qubits.permutation import QubitPermutation, permute_qubits
from tangle_shared.qubits.state import StateVector, require_qubits

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantReport:
    distinguished_qubit: QubitLabel
    i3_0: complex
    i3_1: complex
    p_0: complex
    p_1: complex
    t: complex
    i48: complex
    j: complex
    delta: complex
    tau4: float
    two_qubit_invariants: list[TwoQubitInvariant] = field(default_factory=list)
    degenerate: bool = False

    @property
    def three_qubit_invariants(self) -> ThreeQubitInvariants:
        return ThreeQubitInvariants(
            i3_0=self.i3_0, i3_1=self.i3_1, p_0=self.p_0, p_1=self.p_1, t=self.t
        )


def full_report(state: StateVector, distinguished: QubitLabel | str) -> InvariantReport:
    """Every invariant with ``distinguished`` relabeled into the A4 slot.

    The remaining qubits keep their relative order and play A1A2A3.
    """
    require_qubits(state, FOUR_QUBITS)
    perm = QubitPermutation.to_last(distinguished, FOUR_QUBITS)
    relabeled = permute_qubits(state, perm)
    inv = ThreeQubitInvariants.from_state(relabeled)
    i48_value = i48_from(inv)
    j_value = j_from(inv)

    if state.is_degenerate:
        _log.warning('Reporting the all-zero state: four tangle set to 0')
        tau4_value = 0.0
    else:
        tau4_value = tau4(relabeled)

    return InvariantReport(
        distinguished_qubit=QubitLabel(distinguished),
        i3_0=inv.i3_0,
        i3_1=inv.i3_1,
        p_0=inv.p_0,
        p_1=inv.p_1,
        t=inv.t,
        i48=i48_value,
        j=j_value,
        delta=i48_value**3 - 27 * j_value**2,
        tau4=tau4_value,
        two_qubit_invariants=two_qubit_invariant_list(relabeled),
        degenerate=state.is_degenerate,
    )


def reports_for_all(state: StateVector) -> list[InvariantReport]:
    return [full_report(state, label) for label in QubitLabel.for_qubits(FOUR_QUBITS)]