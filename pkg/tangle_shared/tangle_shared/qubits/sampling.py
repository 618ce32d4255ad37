"""Deterministic random states and local unitaries.

Every sampler draws from numpy's PCG64 ``Generator`` seeded explicitly, so the same
seed always reproduces bit-identical output. Verification trials derive their own
generator from ``(master_seed, trial_index)`` and therefore do not depend on the
order in which trials are executed.
"""

import numpy as np
from numpy.typing import NDArray

from tangle_shared.constants import SUPPORTED_QUBIT_COUNTS
from tangle_shared.enums import UnitaryGroup
from tangle_shared.exceptions import QubitCountError
from tangle_shared.qubits.state import StateVector, make_state


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def sample_state(rng: np.random.Generator, n_qubits: int) -> StateVector:
    if n_qubits not in SUPPORTED_QUBIT_COUNTS:
        raise QubitCountError(
            f'random states are supported for {SUPPORTED_QUBIT_COUNTS} qubits, '
            f'got {n_qubits}'
        )
    real, imag = rng.standard_normal((2, 2**n_qubits))
    amplitudes = real + 1j * imag
    return make_state(n_qubits, amplitudes / np.linalg.norm(amplitudes))


def sample_su2(rng: np.random.Generator) -> NDArray[np.complex128]:
    """Haar SU(2) element [[a, -b*], [b, a*]] with a = cos(t)e^{ip}, b = sin(t)e^{iq}.

    sin(t)^2 uniform on [0, 1] and both phases uniform give the Haar measure.
    """
    psi, chi = rng.uniform(0.0, 2.0 * np.pi, size=2)
    theta = np.arcsin(np.sqrt(rng.uniform(0.0, 1.0)))
    a = np.cos(theta) * np.exp(1j * psi)
    b = np.sin(theta) * np.exp(1j * chi)
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]], dtype=np.complex128)


def sample_u2(rng: np.random.Generator) -> NDArray[np.complex128]:
    phase = rng.uniform(0.0, 2.0 * np.pi)
    return np.exp(1j * phase) * sample_su2(rng)


def sample_unitary(rng: np.random.Generator, group: UnitaryGroup) -> NDArray[np.complex128]:
    if group == UnitaryGroup.SPECIAL_UNITARY:
        return sample_su2(rng)
    return sample_u2(rng)


def sample_disk(rng: np.random.Generator, radius: float) -> complex:
    """Uniform point of the disk |y| <= radius."""
    modulus = radius * np.sqrt(rng.uniform(0.0, 1.0))
    return complex(modulus * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))


def sample_scale(rng: np.random.Generator, min_modulus: float, max_modulus: float) -> complex:
    """Complex factor with log-uniform modulus in [min_modulus, max_modulus]."""
    modulus = np.exp(rng.uniform(np.log(min_modulus), np.log(max_modulus)))
    return complex(modulus * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))


def random_state(n_qubits: int, seed: int) -> StateVector:
    return sample_state(make_rng(seed), n_qubits)


def random_su2(seed: int) -> NDArray[np.complex128]:
    return sample_su2(make_rng(seed))


def random_u2(seed: int) -> NDArray[np.complex128]:
    return sample_u2(make_rng(seed))
