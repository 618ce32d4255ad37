from pydantic import Field

from tangle_shared.invariants.report import InvariantReport
from tangle_shared.schemas.base import RealBaseModel

ComplexPair = tuple[float, float]


def to_pair(value: complex) -> ComplexPair:
    return value.real, value.imag


class TwoQubitInvariantSchema(RealBaseModel):
    label: str
    value: ComplexPair


class InvariantReportSchema(RealBaseModel):
    """JSON form of an invariant report; complex numbers are [re, im] pairs."""

    distinguished_qubit: str
    i3_0: ComplexPair
    i3_1: ComplexPair
    p_0: ComplexPair
    p_1: ComplexPair
    t: ComplexPair
    three_qubit_moduli: dict[str, float]
    i48: ComplexPair
    j: ComplexPair
    delta: ComplexPair
    tau4: float
    two_qubit_invariants: list[TwoQubitInvariantSchema]
    degenerate: bool

    @classmethod
    def from_report(cls, report: InvariantReport) -> 'InvariantReportSchema':
        return cls(
            distinguished_qubit=report.distinguished_qubit.value,
            i3_0=to_pair(report.i3_0),
            i3_1=to_pair(report.i3_1),
            p_0=to_pair(report.p_0),
            p_1=to_pair(report.p_1),
            t=to_pair(report.t),
            three_qubit_moduli=report.three_qubit_invariants.moduli(),
            i48=to_pair(report.i48),
            j=to_pair(report.j),
            delta=to_pair(report.delta),
            tau4=report.tau4,
            two_qubit_invariants=[
                TwoQubitInvariantSchema(label=item.label, value=to_pair(item.value))
                for item in report.two_qubit_invariants
            ],
            degenerate=report.degenerate,
        )


class ComputeDocumentSchema(RealBaseModel):
    """Output of ``compute``: the same fields for every input state."""

    label: str
    n_qubits: int
    original_norm: float
    degenerate: bool
    reports: list[InvariantReportSchema] = Field(default_factory=list)
    tau3: float | None = None
    i3: ComplexPair | None = None
    delta_spread: float | None = None
    i48_spread: float | None = None
