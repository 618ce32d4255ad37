#!/usr/bin/env python3
"""Four-qubit invariants command line entry point."""

import sys

import uvloop

from cli.core.launcher import CliLauncher
from cli.core.log import setup_logging


def main(argv: list[str] | None = None) -> int:
    setup_logging()
    return CliLauncher().run(argv)


if __name__ == '__main__':
    uvloop.install()
    sys.exit(main())
