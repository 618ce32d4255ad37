import math
from typing import Callable

import numpy as np
import pytest
from tangle_shared.qubits import builtin_state, make_state
from tangle_shared.qubits.state import StateVector
from tangle_shared.schemas.outcome import ToleranceConfig


def _superposition(*terms: str) -> StateVector:
    amplitudes = np.zeros(2 ** len(terms[0]), dtype=np.complex128)
    for bits in terms:
        amplitudes[int(bits, 2)] = 1.0
    return make_state(len(terms[0]), amplitudes / math.sqrt(len(terms)))


@pytest.fixture
def superposition() -> Callable[..., StateVector]:
    """Equal-weight normalized superposition of basis bit strings."""
    return _superposition


@pytest.fixture
def ghz4() -> StateVector:
    return builtin_state('ghz4')


@pytest.fixture
def w4() -> StateVector:
    return builtin_state('w4')


@pytest.fixture
def cluster4() -> StateVector:
    return builtin_state('cluster4')


@pytest.fixture
def product4() -> StateVector:
    return builtin_state('product4')


@pytest.fixture
def ghz3() -> StateVector:
    return builtin_state('ghz3')


@pytest.fixture
def tol() -> ToleranceConfig:
    return ToleranceConfig()
