import pytest
from tangle_shared.enums import BuiltinStateName, Provenance
from tangle_shared.exceptions import UnknownBuiltinStateError
from tangle_shared.qubits import builtin_state
from tangle_shared.qubits._registry import BuiltinStateRegistry
from tangle_shared.qubits.builtin import get_builtin_cls


@pytest.mark.parametrize('name', BuiltinStateName.choices())
def test_builtin_states_are_normalized(name):
    assert builtin_state(name).norm_squared == pytest.approx(1.0, abs=1e-15)


def test_amplitudes():
    assert builtin_state('w4')['0001'] == pytest.approx(0.5)
    assert builtin_state('cluster4')['1111'] == pytest.approx(-0.5)
    assert builtin_state('product4')['0000'] == 1.0
    assert builtin_state('ghz3').n_qubits == 3


def test_registry_holds_every_name():
    assert set(BuiltinStateRegistry.get_registry()) == set(BuiltinStateName)


def test_known_tangles():
    assert get_builtin_cls('ghz4').KNOWN_TANGLES == {'tau4': (1.0, Provenance.DERIVED)}
    assert get_builtin_cls('ghz3').KNOWN_TANGLES['tau3'][0] == 1.0
    assert get_builtin_cls('product4').KNOWN_TANGLES['tau4'][1] is Provenance.TRIVIAL


def test_unknown_name():
    with pytest.raises(UnknownBuiltinStateError, match='unknown builtin state "bell"'):
        builtin_state('bell')
