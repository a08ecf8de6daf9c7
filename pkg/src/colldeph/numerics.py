"""Dense complex linear algebra for the small Hermitian problems used here.

Everything operates on square complex matrices of dimension 2..8; the direct
LAPACK routines behind numpy are more than adequate at these sizes.
"""

import numpy as np

HERMITIAN_RTOL = 1e-12
PSD_FLOOR = -1e-10
MAX_DIM = 8


class NotHermitianError(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class NotPSDError(ValueError):
    """Input matrix has an eigenvalue below the PSD clipping floor."""


def _as_square(a, name="matrix"):
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    if not 2 <= a.shape[0] <= MAX_DIM:
        raise ValueError(f"{name} dimension {a.shape[0]} outside supported range 2..{MAX_DIM}")
    return a


def hermiticity_defect(a):
    """Max entrywise deviation of ``a`` from its conjugate transpose."""
    return float(np.max(np.abs(a - a.conj().T)))


def require_hermitian(a, name="matrix"):
    a = _as_square(a, name)
    scale = float(np.max(np.abs(a)))
    if hermiticity_defect(a) > HERMITIAN_RTOL * scale:
        raise NotHermitianError(
            f"{name} deviates from Hermiticity by {hermiticity_defect(a):.3e} "
            f"(allowed {HERMITIAN_RTOL * scale:.3e})"
        )
    return 0.5 * (a + a.conj().T)


def hermitian_eigenvalues(a):
    """Eigenvalues of a Hermitian matrix, sorted descending."""
    h = require_hermitian(a)
    return np.linalg.eigvalsh(h)[::-1]


def psd_sqrt(a):
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in [PSD_FLOOR, 0) are clipped to zero; anything below the
    floor raises NotPSDError.
    """
    h = require_hermitian(a)
    w, v = np.linalg.eigh(h)
    if w[0] < PSD_FLOOR:
        raise NotPSDError(f"matrix is not PSD: smallest eigenvalue {w[0]:.3e}")
    # O(eps) eigenvalue noise would come back as O(sqrt(eps)) after the root;
    # values that close to zero are exact zeros
    tiny = 64.0 * np.finfo(float).eps * max(float(w[-1]), 0.0)
    w = np.where(w < tiny, 0.0, w)
    b = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (b + b.conj().T)


def product_spectrum_sqrt(rho, rho_tilde):
    """Square roots of the eigenvalues of ``rho @ rho_tilde``, descending.

    Both inputs must be Hermitian PSD of equal dimension.  The spectrum is
    obtained from the Hermitian congruence sqrt(rho) @ rho_tilde @ sqrt(rho),
    which shares the eigenvalues of the plain product but keeps the problem
    Hermitian; negative roundoff is clipped to zero before the square root.
    """
    rho = _as_square(rho, "rho")
    rho_tilde = _as_square(rho_tilde, "rho_tilde")
    if rho.shape != rho_tilde.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {rho_tilde.shape}")
    s = psd_sqrt(rho)
    m = s @ require_hermitian(rho_tilde, "rho_tilde") @ s
    lam2 = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    # eigenvalues within a few machine epsilons of the top one are exact
    # zeros; clipping them first keeps the square root from amplifying
    # O(eps) eigensolver noise to O(sqrt(eps))
    tiny = 64.0 * np.finfo(float).eps * max(float(lam2[-1]), 0.0)
    lam2 = np.where(lam2 < tiny, 0.0, lam2)
    return np.sqrt(lam2)[::-1]
