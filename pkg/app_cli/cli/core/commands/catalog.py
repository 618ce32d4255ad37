from tangle_shared.qubits._registry import BuiltinStateRegistry

from cli.core.commands.abstract import AbstractCommand
from cli.core.constants import TANGLE_SYMBOLS
from cli.core.enums import ExitCode


class CatalogCommand(AbstractCommand):
    NAME = 'catalog'

    async def run(self) -> ExitCode:
        for name, state_cls in BuiltinStateRegistry.get_registry().items():
            tangles = ' '.join(
                f'{TANGLE_SYMBOLS[key]}={value:g} [{provenance}]'
                for key, (value, provenance) in state_cls.KNOWN_TANGLES.items()
            )
            self._echo(f'{name} {tangles} {state_cls.DESCRIPTION}')
        return ExitCode.SUCCESS
