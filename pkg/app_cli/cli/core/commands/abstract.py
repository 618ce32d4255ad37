import argparse
import sys
from abc import ABC
from typing import TextIO

from tangle_shared.utils.tasks.abstract import AbstractTask

from cli.core.schemas import ConfigSchema


class AbstractCommand(AbstractTask, ABC):
    def __init__(
        self, args: argparse.Namespace, conf: ConfigSchema, out: TextIO | None = None
    ) -> None:
        super().__init__()
        self._args = args
        self._conf = conf
        self._out = out or sys.stdout

    def _echo(self, text: str = '') -> None:
        print(text, file=self._out)
