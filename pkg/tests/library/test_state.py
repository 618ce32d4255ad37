import logging
import math

import numpy as np
import pytest
from tangle_shared.exceptions import InvalidStateError, QubitCountError
from tangle_shared.qubits import make_state, normalized
from tangle_shared.qubits.state import require_qubits

S2 = 1.0 / math.sqrt(2.0)


def test_ghz4_amplitudes():
    amplitudes = np.zeros(16)
    amplitudes[0] = amplitudes[15] = S2
    state = make_state(4, amplitudes)
    assert state.n_qubits == 4
    assert state['0000'] == pytest.approx(S2)
    assert state['1111'] == pytest.approx(S2)
    assert state[15] == state['1111']
    assert state.tensor[1, 1, 1, 1] == pytest.approx(S2)


def test_big_endian_index_convention():
    amplitudes = np.zeros(16)
    amplitudes[8] = 1.0
    state = make_state(4, amplitudes)
    assert state['1000'] == 1.0
    assert state.tensor[1, 0, 0, 0] == 1.0


def test_three_qubit_state():
    state = make_state(3, np.arange(8))
    assert state.n_qubits == 3
    assert state.tensor.shape == (2, 2, 2)
    assert state['110'] == 6


def test_wrong_amplitude_count():
    with pytest.raises(InvalidStateError, match='expected 16 amplitudes for 4 qubits, got 15'):
        make_state(4, np.ones(15))


@pytest.mark.parametrize('n_qubits', [1, 2, 5])
def test_unsupported_qubit_count(n_qubits):
    with pytest.raises(QubitCountError):
        make_state(n_qubits, np.ones(2**n_qubits))


@pytest.mark.parametrize('bad', [np.nan, np.inf, complex(0, np.inf)])
def test_non_finite_amplitude(bad):
    amplitudes = np.ones(16, dtype=np.complex128)
    amplitudes[3] = bad
    with pytest.raises(InvalidStateError, match='finite'):
        make_state(4, amplitudes)


def test_all_zero_state_is_flagged(caplog):
    with caplog.at_level(logging.WARNING):
        state = make_state(4, np.zeros(16))
    assert state.is_degenerate
    assert state.norm_squared == 0.0
    assert 'All-zero' in caplog.text


def test_amplitudes_are_read_only(ghz4):
    with pytest.raises(ValueError):
        ghz4.amplitudes[0] = 0.0


def test_input_array_is_copied():
    amplitudes = np.ones(8, dtype=np.complex128)
    state = make_state(3, amplitudes)
    amplitudes[0] = 5.0
    assert state[0] == 1.0


def test_bad_bit_string(ghz4):
    with pytest.raises(IndexError):
        ghz4['012']
    with pytest.raises(IndexError):
        ghz4['010']


def test_equality_and_hash(ghz4):
    assert ghz4 == ghz4.scaled(1.0)
    assert ghz4 != ghz4.scaled(-1.0)
    with pytest.raises(TypeError):
        hash(ghz4)


def test_normalized_reports_original_norm(ghz4):
    state, norm = normalized(ghz4.scaled(3.0))
    assert norm == pytest.approx(3.0)
    assert state.is_normalized(1e-12)
    assert state.allclose(ghz4)


def test_normalized_rejects_zero_state():
    with pytest.raises(InvalidStateError):
        normalized(make_state(3, np.zeros(8)))


def test_require_qubits(ghz3):
    with pytest.raises(QubitCountError, match='expected a 4-qubit state'):
        require_qubits(ghz3, 4)
