"""Dense complex linear algebra for 2-, 4- and 16-dimensional quantum objects.

Four-qubit basis states are ordered with qubit 1 as the most significant
factor: ``|b1 b2 b3 b4>`` sits at index ``8*b1 + 4*b2 + 2*b3 + b4``.
Qubit labels in this module are 1-based to match that convention.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .errors import BadQubitSet, InvalidState, NotHermitian, NotPsd

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
NORM_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def kron(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices (or vectors), left to right."""
    if not factors:
        raise ValueError("kron needs at least one factor")
    return reduce(np.kron, (np.asarray(f) for f in factors))


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def conjugate_in_computational_basis(a: np.ndarray) -> np.ndarray:
    """Entrywise complex conjugate. No transpose."""
    return np.conj(np.asarray(a))


def hermiticity_defect(h: np.ndarray) -> float:
    h = np.asarray(h)
    return float(np.max(np.abs(h - dagger(h)))) if h.size else 0.0


def hermitian_eig(h: np.ndarray, tol: float = HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    eigenvectors as orthonormal columns. Raises :class:`NotHermitian` when
    ``max|h - h^dagger|`` exceeds ``tol``.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {h.shape}")
    defect = hermiticity_defect(h)
    if defect > tol:
        raise NotHermitian(f"matrix is not Hermitian (max |h - h^dagger| = {defect:.3g})")
    # symmetrize so eigh sees an exactly Hermitian input
    w, v = np.linalg.eigh(0.5 * (h + dagger(h)))
    return w, v


def psd_sqrt(h: np.ndarray, tol: float = PSD_TOL) -> np.ndarray:
    """Unique positive semidefinite square root.

    Eigenvalues in ``[-tol, 0)`` are treated as floating-point noise and
    clamped to zero; anything more negative raises :class:`NotPsd`.
    """
    w, v = hermitian_eig(h)
    if w.size and w[0] < -tol:
        raise NotPsd(f"matrix has eigenvalue {w[0]:.3g} < -{tol:g}")
    # eigenvalues at roundoff level are exact zeros; sqrt would amplify them to ~1e-8
    cutoff = w.size * np.finfo(float).eps * max(abs(w[-1]), 1.0) if w.size else 0.0
    w = np.where(w <= cutoff, 0.0, w)
    return (v * np.sqrt(w)) @ dagger(v)


def is_normalized(psi: np.ndarray, tol: float = NORM_TOL) -> bool:
    return abs(np.linalg.norm(psi) - 1.0) <= tol


def density_from_ket(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, np.conj(psi))


def reduced_density(psi: np.ndarray, keep) -> np.ndarray:
    """Two-qubit reduced state of a normalized four-qubit pure state.

    ``keep`` names the two retained qubits (labels 1..4). The result is
    ordered with the lower-numbered qubit as the first tensor factor.
    """
    keep = tuple(sorted(set(int(q) for q in keep)))
    if len(keep) != 2 or not all(1 <= q <= 4 for q in keep):
        raise BadQubitSet(f"keep must name two distinct qubits from 1..4, got {keep}")
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (16,):
        raise InvalidState(f"expected a 16-dimensional state vector, got shape {psi.shape}")
    if not is_normalized(psi, tol=1e-10):
        raise InvalidState(f"state is not normalized (norm {np.linalg.norm(psi):.15g})")

    traced = tuple(q for q in (1, 2, 3, 4) if q not in keep)
    axes = [q - 1 for q in keep + traced]
    # rows: kept pair, columns: traced pair; rho = A A^dagger
    a = psi.reshape(2, 2, 2, 2).transpose(axes).reshape(4, 4)
    return a @ dagger(a)


def embed_pair_23(op: np.ndarray) -> np.ndarray:
    """Lift a 4x4 operator on qubits (2, 3) to the 16-dim four-qubit space."""
    op = np.asarray(op, dtype=complex)
    if op.shape != (4, 4):
        raise ValueError(f"expected a 4x4 operator, got shape {op.shape}")
    return kron(I2, op, I2)


def check_density(rho: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Validate a two-qubit density matrix and return it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if hermiticity_defect(rho) > tol:
        raise InvalidState("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise InvalidState(f"density matrix has trace {tr.real:.15g}, expected 1")
    w = np.linalg.eigvalsh(0.5 * (rho + dagger(rho)))
    if w[0] < -tol:
        raise InvalidState(f"density matrix has negative eigenvalue {w[0]:.3g}")
    return rho
