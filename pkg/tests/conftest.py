import numpy as np
import pytest

from colldeph import FERMION, QUBIT, DensityMatrix, StateVector, make_system


def random_pure(rng, system):
    amps = rng.normal(size=system.dim) + 1j * rng.normal(size=system.dim)
    amps /= np.linalg.norm(amps)
    return StateVector(system, amps)


def random_density(rng, system, rank=None):
    rank = rank or system.dim
    m = np.zeros((system.dim, system.dim), dtype=np.complex128)
    w = rng.random(rank)
    w /= w.sum()
    for p in w:
        psi = random_pure(rng, system)
        m += p * np.outer(psi.amplitudes, psi.amplitudes.conj())
    return DensityMatrix(system, m)


def random_psd(rng, dim, trace_one=True):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = a @ a.conj().T
    if trace_one:
        m /= np.trace(m).real
    return m


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def fermion():
    return make_system(FERMION)


@pytest.fixture
def qubit():
    return make_system(QUBIT)
