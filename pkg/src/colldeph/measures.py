"""Entanglement and coherence functionals.

Concurrence is computed from the square-rooted spectrum of rho @ rho_tilde,
where the spin-flipped rho_tilde uses the antiunitary appropriate to the
system: sigma_y (x) sigma_y conjugation for two qubits, and for the fermion
pair a real involution acting in a basis whose last element carries an extra
factor i.  That phase is confined to a fixed diagonal unitary applied inside
``tilde`` so that states are stored in the plain angular momentum basis.
"""

import numpy as np
from dataclasses import dataclass

from . import numerics
from .hilbert import FERMION, QUBIT

CONCURRENCE_SLACK = 1e-9

_FERMION_FLIP = np.array(
    [
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    dtype=float,
)
_FERMION_PHASE = np.array([1, 1, 1, 1, 1, 1j], dtype=np.complex128)

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_QUBIT_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y).real
_QUBIT_PHASE = np.ones(4, dtype=np.complex128)


@dataclass(frozen=True)
class SpinFlipConvention:
    """Numeric involution plus the diagonal phase fixing its basis."""

    kind: str
    matrix: np.ndarray
    phase: np.ndarray


FERMION_D = SpinFlipConvention("fermion-d", _FERMION_FLIP, _FERMION_PHASE)
QUBIT_SIGMA_YY = SpinFlipConvention("qubit-sigma-yy", _QUBIT_FLIP, _QUBIT_PHASE)


def convention_for(system):
    if system.kind == FERMION:
        return FERMION_D
    if system.kind == QUBIT:
        return QUBIT_SIGMA_YY
    raise ValueError(f"no spin-flip convention for system kind {system.kind!r}")


def _matrix_of(rho):
    return rho.matrix if hasattr(rho, "matrix") else np.asarray(rho, dtype=np.complex128)


def tilde(rho, conv):
    """Spin-flipped matrix M (P rho P+)* M, mapped back through P.

    Complex conjugation is taken in the phase-fixed basis; the result is
    Hermitian PSD with the same spectrum as rho itself.
    """
    m = _matrix_of(rho)
    if m.shape[0] != conv.matrix.shape[0]:
        raise ValueError(
            f"dimension mismatch: state is {m.shape[0]}, convention wants {conv.matrix.shape[0]}"
        )
    p = conv.phase
    phased = p[:, None] * m * p.conj()[None, :]
    flipped = conv.matrix @ phased.conj() @ conv.matrix
    return p.conj()[:, None] * flipped * p[None, :]


def _finalize_concurrence(value):
    if value > 1.0 + CONCURRENCE_SLACK:
        raise ArithmeticError(f"concurrence {value!r} exceeds 1 beyond tolerance")
    return float(min(max(value, 0.0), 1.0))


def concurrence_matrix(m, conv):
    """Concurrence of a raw density matrix under an explicit convention."""
    lam = numerics.product_spectrum_sqrt(m, tilde(m, conv))
    return _finalize_concurrence(lam[0] - lam[1:].sum())


def concurrence(rho):
    """Fermionic or two-qubit concurrence of a DensityMatrix, in [0, 1]."""
    return concurrence_matrix(rho.matrix, convention_for(rho.system))


def pure_concurrence(psi):
    """Rank-one shortcut |<psi| flip conj |psi>| for pure states."""
    conv = convention_for(psi.system)
    v = conv.phase * psi.amplitudes
    return float(abs(v @ conv.matrix @ v))


def coherence(rho):
    """Sum of the moduli of all off-diagonal entries (both triangles)."""
    a = np.abs(_matrix_of(rho))
    np.fill_diagonal(a, 0.0)
    return float(a.sum())


def linear_entropy(rho):
    """Mixedness 1 - Tr rho^2, zero for pure states."""
    val = 1.0 - float(np.sum(np.abs(_matrix_of(rho)) ** 2))
    return 0.0 if -1e-12 < val < 0.0 else val
