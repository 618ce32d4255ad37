import math

from tangle_shared.constants import FOUR_QUBITS
from tangle_shared.enums import OutputFormat
from tangle_shared.invariants import full_report, reports_for_all
from tangle_shared.invariants.three_qubit import embed_three_qubit, i3_spectator, tau3
from tangle_shared.qubits import builtin_state, normalized
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.report import (
    ComputeDocumentSchema,
    InvariantReportSchema,
    to_pair,
)
from tangle_shared.utils.common import format_complex
from tangle_shared.utils.file import read_state_file
from tangle_shared.verify.residual import relative_spread

from cli.core.commands.abstract import AbstractCommand
from cli.core.constants import ALL_CHOICE
from cli.core.enums import ExitCode


class ComputeCommand(AbstractCommand):
    """Invariant report of a builtin or file state.

    Non-degenerate states are normalized first; the original norm is reported.
    """

    NAME = 'compute'

    async def run(self) -> ExitCode:
        state, label = self._load_state()
        document = self._build_document(state, label)
        if OutputFormat(self._args.format) is OutputFormat.JSON:
            self._echo(document.model_dump_json(indent=2))
        else:
            self._echo(self._render_text(document))
        return ExitCode.SUCCESS

    def _load_state(self) -> tuple[StateVector, str]:
        if self._args.state:
            return builtin_state(self._args.state), self._args.state
        state, label = read_state_file(self._args.file)
        return state, label or self._args.file.name

    def _build_document(self, state: StateVector, label: str) -> ComputeDocumentSchema:
        original_norm = math.sqrt(state.norm_squared)
        if state.is_degenerate:
            self._log.warning('State "%s" is all-zero, every invariant is 0', label)
        else:
            state, original_norm = normalized(state)

        document = ComputeDocumentSchema(
            label=label,
            n_qubits=state.n_qubits,
            original_norm=original_norm,
            degenerate=state.is_degenerate,
        )
        if state.n_qubits == FOUR_QUBITS:
            self._add_four_qubit_reports(document, state)
        else:
            document.i3 = to_pair(i3_spectator(embed_three_qubit(state), 0))
            document.tau3 = 0.0 if state.is_degenerate else tau3(state)
        return document

    def _add_four_qubit_reports(
        self, document: ComputeDocumentSchema, state: StateVector
    ) -> None:
        if self._args.distinguished != ALL_CHOICE:
            report = full_report(state, self._args.distinguished)
            document.reports = [InvariantReportSchema.from_report(report)]
            return

        reports = reports_for_all(state)
        document.reports = [InvariantReportSchema.from_report(r) for r in reports]
        floor = self._conf.verify.tolerances.abs_floor
        document.delta_spread = relative_spread([r.delta for r in reports], floor)
        document.i48_spread = relative_spread([r.i48 for r in reports], floor)

    @staticmethod
    def _render_text(document: ComputeDocumentSchema) -> str:
        lines = [
            f'state: {document.label} ({document.n_qubits} qubits, '
            f'original norm {document.original_norm:.12g})'
        ]
        if document.degenerate:
            lines.append('degenerate: all amplitudes are zero')
        if document.tau3 is not None:
            lines.append(f'I3 = {format_complex(complex(*document.i3))}')
            lines.append(f'tau3 = {document.tau3:.12g}')

        for report in document.reports:
            lines.append(f'[{report.distinguished_qubit} distinguished]')
            for name in ('i3_0', 'i3_1', 'p_0', 'p_1', 't', 'i48', 'j', 'delta'):
                value = complex(*getattr(report, name))
                lines.append(f'  {name} = {format_complex(value)}')
            lines.append(f'  tau4 = {report.tau4:.12g}')
            lines.append('  two-qubit invariants of A1A2:')
            lines.extend(
                f'    {item.label} = {format_complex(complex(*item.value))}'
                for item in report.two_qubit_invariants
            )

        if document.delta_spread is not None:
            lines.append(f'cross-triple delta spread: {document.delta_spread:.3e}')
            lines.append(f'cross-triple i48 spread (not asserted): {document.i48_spread:.3e}')
        return '\n'.join(lines)
