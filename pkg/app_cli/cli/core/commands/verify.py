from tangle_shared.enums import CheckSuite
from tangle_shared.verify import VerificationRunner

from cli.core.commands.abstract import AbstractCommand
from cli.core.constants import ALL_CHOICE
from cli.core.enums import ExitCode


class VerifyCommand(AbstractCommand):
    NAME = 'verify'

    async def run(self) -> ExitCode:
        suites = self._get_suites()
        tol = self._conf.verify.tolerances.to_config(rel=self._args.rel)
        outcomes = await VerificationRunner(
            suites=suites, trials=self._args.trials, seed=self._args.seed, tol=tol
        ).run()
        for outcome in outcomes:
            self._echo(outcome.to_json_line())

        if all(outcome.passed for outcome in outcomes):
            return ExitCode.SUCCESS
        self._log.error(
            'Failed suites: %s',
            ', '.join(outcome.name for outcome in outcomes if not outcome.passed),
        )
        return ExitCode.VERIFICATION_FAILED

    def _get_suites(self) -> list[CheckSuite]:
        if self._args.suite == ALL_CHOICE:
            return list(CheckSuite)
        return [CheckSuite(self._args.suite)]
