import argparse
import asyncio
import logging
import sys

from pydantic import ValidationError
from tangle_shared.exceptions import TangleError

from cli.core.commands.abstract import AbstractCommand
from cli.core.commands.catalog import CatalogCommand
from cli.core.commands.compute import ComputeCommand
from cli.core.commands.verify import VerifyCommand
from cli.core.config import get_main_config
from cli.core.enums import ExitCode
from cli.core.parser import build_parser


class CliLauncher:
    _COMMAND_TYPES: tuple[type[AbstractCommand], ...] = (
        ComputeCommand,
        VerifyCommand,
        CatalogCommand,
    )

    def __init__(self) -> None:
        self._log = logging.getLogger(self.__class__.__name__)
        self._conf = get_main_config()
        self._commands = {cmd_cls.NAME: cmd_cls for cmd_cls in self._COMMAND_TYPES}

    def run(self, argv: list[str] | None = None) -> int:
        try:
            args = build_parser(self._conf).parse_args(argv)
        except SystemExit as err:
            return err.code if isinstance(err.code, int) else ExitCode.USAGE_ERROR
        return self._dispatch(args)

    def _dispatch(self, args: argparse.Namespace) -> int:
        command = self._commands[args.command](args=args, conf=self._conf)
        self._log.debug('Running "%s" with %s', args.command, vars(args))
        try:
            return asyncio.run(command.run())
        except TangleError as err:
            return self._fail(err.message)
        except ValidationError as err:
            return self._fail(str(err))

    def _fail(self, message: str) -> int:
        print(f'error: {message}', file=sys.stderr)
        return ExitCode.USAGE_ERROR
