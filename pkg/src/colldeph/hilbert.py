"""Level systems and named initial states.

Two concrete systems are modelled:

* a pair of identical spin-3/2 fermions, described in the 6-dimensional
  antisymmetric two-particle space spanned by the total angular momentum
  states |2,2>, |2,1>, |2,0>, |2,-1>, |2,-2>, |0,0>;
* a pair of distinguishable qubits in the computational basis
  |00>, |01>, |10>, |11>.

Both couple to the bath through the total J_z, so each basis state carries a
pointer eigenvalue L_n (the J_z projection) and an energy E_n = omega0 * L_n.
"""

import numpy as np
from dataclasses import dataclass

from . import numerics

FERMION = "fermion"
QUBIT = "qubit"

NORM_ATOL = 1e-12

_FERMION_LABELS = ("|2,2>", "|2,1>", "|2,0>", "|2,-1>", "|2,-2>", "|0,0>")
_FERMION_L = (2.0, 1.0, 0.0, -1.0, -2.0, 0.0)
_QUBIT_LABELS = ("|00>", "|01>", "|10>", "|11>")
_QUBIT_L = (1.0, 0.0, 0.0, -1.0)

# Slater determinants |psi^sl_ij> of single-particle levels i<j, expressed in
# the angular momentum basis above.
_SQ2 = 1.0 / np.sqrt(2.0)
_SLATER = {
    (1, 2): (1, 0, 0, 0, 0, 0),
    (1, 3): (0, 1, 0, 0, 0, 0),
    (2, 4): (0, 0, 0, 1, 0, 0),
    (3, 4): (0, 0, 0, 0, 1, 0),
    (1, 4): (0, 0, _SQ2, 0, 0, _SQ2),
    (2, 3): (0, 0, -_SQ2, 0, 0, _SQ2),
}


def _readonly(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class LevelSystem:
    """A finite basis with pointer eigenvalues L and energies E = omega0 * L."""

    kind: str
    dim: int
    labels: tuple
    L: np.ndarray
    E: np.ndarray
    omega0: float

    def dfs_indices(self):
        """Indices of the basis states with pointer eigenvalue zero."""
        return tuple(int(i) for i in np.flatnonzero(self.L == 0.0))


def make_system(kind, omega0=0.0):
    """Build the fermionic (dim 6) or qubit (dim 4) level system."""
    if omega0 < 0:
        raise ValueError("omega0 must be >= 0")
    if kind == FERMION:
        labels, L = _FERMION_LABELS, _FERMION_L
    elif kind == QUBIT:
        labels, L = _QUBIT_LABELS, _QUBIT_L
    else:
        raise ValueError(f"unknown system kind {kind!r}")
    L = _readonly(np.array(L, dtype=float))
    E = _readonly(omega0 * L)
    return LevelSystem(kind=kind, dim=len(labels), labels=labels, L=L, E=E,
                       omega0=float(omega0))


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state over a LevelSystem basis."""

    system: LevelSystem
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.system.dim,):
            raise ValueError(f"expected {self.system.dim} amplitudes, got shape {amps.shape}")
        norm2 = float(np.sum(np.abs(amps) ** 2))
        if abs(norm2 - 1.0) > NORM_ATOL:
            raise ValueError(f"state not normalized: sum |a|^2 = {norm2!r}")
        object.__setattr__(self, "amplitudes", _readonly(amps))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, PSD, trace-one matrix over a LevelSystem basis."""

    system: LevelSystem
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (self.system.dim, self.system.dim):
            raise ValueError(f"expected {self.system.dim}x{self.system.dim} matrix, got {m.shape}")
        m = numerics.require_hermitian(m, "density matrix")
        tr = float(np.real(np.trace(m)))
        if abs(tr - 1.0) > 1e-12:
            raise ValueError(f"density matrix trace {tr!r} differs from 1")
        w = np.linalg.eigvalsh(m)
        if w[0] < numerics.PSD_FLOOR:
            raise numerics.NotPSDError(f"density matrix eigenvalue {w[0]:.3e} below PSD floor")
        object.__setattr__(self, "matrix", _readonly(m))


def slater_state(system, i, j):
    """Slater determinant of single-particle levels i and j (1-based).

    Swapping the indices flips the overall sign (antisymmetry); i == j is
    rejected since the antisymmetrized state vanishes.
    """
    if system.kind != FERMION:
        raise ValueError("Slater states are defined for the fermionic system")
    if i == j:
        raise ValueError("antisymmetrization of equal levels vanishes")
    for idx in (i, j):
        if idx not in (1, 2, 3, 4):
            raise ValueError(f"single-particle index {idx} outside 1..4")
    sign = 1.0
    if i > j:
        i, j, sign = j, i, -1.0
    amps = sign * np.array(_SLATER[(i, j)], dtype=np.complex128)
    return StateVector(system, amps)


def dfs_state(system, alpha):
    """Superposition alpha |L=0 state 1> + beta |L=0 state 2>.

    beta = sqrt(1 - |alpha|^2) is taken real and non-negative, which fixes
    the irrelevant global phase.  alpha may be complex with |alpha| <= 1.
    """
    alpha = complex(alpha)
    if abs(alpha) > 1.0 + 1e-12:
        raise ValueError(f"|alpha| = {abs(alpha)} exceeds 1")
    beta = np.sqrt(max(0.0, 1.0 - abs(alpha) ** 2))
    amps = np.zeros(system.dim, dtype=np.complex128)
    first, second = system.dfs_indices()
    amps[first] = alpha
    amps[second] = beta
    return StateVector(system, amps)


_NAMED_FIXED = {
    # maximally entangled superposition of the L = +1 and L = -1 fermion states
    "f24": (FERMION, (0, _SQ2, 0, _SQ2, 0, 0)),
    # maximally entangled superposition of the L = +2 and L = -2 fermion states
    "f15": (FERMION, (_SQ2, 0, 0, 0, _SQ2, 0)),
    # equal superposition of the first four fermion basis states
    "f1234": (FERMION, (0.5, 0.5, 0.5, 0.5, 0, 0)),
    # Bell state (|00> + |11>)/sqrt(2)
    "q14": (QUBIT, (_SQ2, 0, 0, _SQ2)),
    # Bell state (|01> + |10>)/sqrt(2), inside the qubit DFS
    "bell_phi": (QUBIT, (0, _SQ2, _SQ2, 0)),
    # uniform superposition of all four computational states (a product state)
    "q1234": (QUBIT, (0.5, 0.5, 0.5, 0.5)),
    # sqrt(0.2)(|00> + |01> + |10>) + sqrt(0.4)|11>
    "q123_4": (QUBIT, (np.sqrt(0.2), np.sqrt(0.2), np.sqrt(0.2), np.sqrt(0.4))),
}

_NAMED_DFS = {"dfs_fermion": FERMION, "dfs_qubit": QUBIT}

STATE_NAMES = tuple(sorted(_NAMED_FIXED) + sorted(_NAMED_DFS))


def named_state(name, alpha=None, omega0=0.0):
    """Construct one of the named initial states.

    ``dfs_fermion`` and ``dfs_qubit`` require the superposition weight
    ``alpha``; the fixed states reject it.
    """
    if name in _NAMED_DFS:
        if alpha is None:
            raise ValueError(f"state {name!r} requires alpha")
        return dfs_state(make_system(_NAMED_DFS[name], omega0), alpha)
    if name in _NAMED_FIXED:
        if alpha is not None:
            raise ValueError(f"state {name!r} does not take alpha")
        kind, amps = _NAMED_FIXED[name]
        return StateVector(make_system(kind, omega0), np.array(amps, dtype=np.complex128))
    raise KeyError(f"unknown state name {name!r}; known: {', '.join(STATE_NAMES)}")


def pure_density(psi):
    """Rank-one projector |psi><psi| as a DensityMatrix."""
    m = np.outer(psi.amplitudes, psi.amplitudes.conj())
    return DensityMatrix(psi.system, m)
