import json
from pathlib import Path

from pydantic import ValidationError

from tangle_shared.exceptions import InvalidStateError, StateFileError
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.state_file import StateFileSchema


def _first_error_message(err: ValidationError) -> str:
    error = err.errors()[0]
    location = '.'.join(str(part) for part in error['loc'])
    message = error['msg'].removeprefix('Value error, ')
    return f'{location}: {message}' if location else message


def read_state_file(path: Path) -> tuple[StateVector, str | None]:
    """Load a state file, returning the state and its optional label."""
    try:
        raw = Path(path).read_text()
    except OSError as err:
        raise StateFileError(f'cannot read state file {path}: {err.strerror}') from err
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as err:
        raise StateFileError(f'malformed JSON in {path}: {err}') from err
    try:
        schema = StateFileSchema.model_validate(data)
    except ValidationError as err:
        raise StateFileError(f'invalid state file {path}: {_first_error_message(err)}') from err
    try:
        return schema.to_state(), schema.label
    except InvalidStateError as err:
        raise StateFileError(f'invalid state file {path}: {err.message}') from err


def write_state_file(path: Path, state: StateVector, label: str | None = None) -> None:
    schema = StateFileSchema.from_state(state, label=label)
    Path(path).write_text(schema.model_dump_json(indent=2) + '\n')
