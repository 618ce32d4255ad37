import argparse
from pathlib import Path

from tangle_shared.enums import BuiltinStateName, CheckSuite, OutputFormat, QubitLabel

from cli.core.constants import ALL_CHOICE
from cli.core.schemas import ConfigSchema


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{value}" is not an integer') from None
    if number < 1:
        raise argparse.ArgumentTypeError(f'trials ≥ 1 required, got {number}')
    return number


def positive_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{value}" is not a number') from None
    if not number > 0:
        raise argparse.ArgumentTypeError(f'tolerance must be positive, got {value}')
    return number


def build_parser(conf: ConfigSchema) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='tangles',
        description='Polynomial entanglement invariants of four-qubit pure states.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    compute = subparsers.add_parser(
        'compute', help='Compute the invariant report of a state.'
    )
    source = compute.add_mutually_exclusive_group(required=True)
    source.add_argument('--state', choices=BuiltinStateName.choices(), help='Builtin state.')
    source.add_argument('--file', type=Path, help='State file (JSON).')
    compute.add_argument(
        '--distinguished',
        choices=QubitLabel.choices() + (ALL_CHOICE,),
        default=conf.compute.distinguished,
        help='Qubit playing the A4 role, or "all" for every choice.',
    )
    compute.add_argument(
        '--format',
        choices=OutputFormat.choices(),
        default=conf.compute.format.value,
    )

    verify = subparsers.add_parser('verify', help='Run the verification suites.')
    verify.add_argument(
        '--suite',
        choices=CheckSuite.choices() + (ALL_CHOICE,),
        default=conf.verify.suite,
    )
    verify.add_argument('--trials', type=positive_int, default=conf.verify.trials)
    verify.add_argument('--seed', type=int, default=conf.verify.seed)
    verify.add_argument(
        '--rel',
        type=positive_float,
        default=None,
        help='Relative tolerance (default from config).',
    )

    subparsers.add_parser('catalog', help='List builtin states and known tangles.')
    return parser
