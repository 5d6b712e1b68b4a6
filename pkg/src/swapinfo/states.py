"""Bell basis, the two-Bell-pair initial state, Bell-diagonal states and PPT.

Bell states are labelled 1..4::

    Psi1 = (|00> + |11>)/sqrt2     Psi2 = (|00> - |11>)/sqrt2
    Psi3 = (|01> + |10>)/sqrt2     Psi4 = (|01> - |10>)/sqrt2
"""

from __future__ import annotations

import numpy as np

from .errors import BadIndex, BadWeights
from .linalg import check_density, dagger, hermitian_eig

_S = 1.0 / np.sqrt(2.0)

# rows are Psi1..Psi4 in the computational basis |00>, |01>, |10>, |11>
BELL_BASIS = np.array(
    [
        [_S, 0, 0, _S],
        [_S, 0, 0, -_S],
        [0, _S, _S, 0],
        [0, _S, -_S, 0],
    ],
    dtype=complex,
)

BELL_SIGNS = np.array(
    [
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ],
    dtype=int,
)

# |Psi_i>_12 |Psi_i>_34 = (phase_i / 2) sum_l mu_il |Psi_l>_23 |Psi_l>_14.
# Row 4 carries an overall -1 relative to the bare sign matrix.
BELL_PRODUCT_PHASES = np.array([1, 1, 1, -1], dtype=int)


def _check_label(i) -> int:
    if isinstance(i, bool) or int(i) != i or not 1 <= int(i) <= 4:
        raise BadIndex(f"Bell label must be 1, 2, 3 or 4, got {i!r}")
    return int(i)


def bell_vector(i: int) -> np.ndarray:
    """Bell state ``|Psi_i>`` as a length-4 complex vector."""
    return BELL_BASIS[_check_label(i) - 1].copy()


def bell_projector(i: int) -> np.ndarray:
    v = bell_vector(i)
    return np.outer(v, np.conj(v))


def bell_sign_matrix() -> np.ndarray:
    """The 4x4 matrix of signs mu_il relating (12)(34) and (23)(14) Bell products."""
    return BELL_SIGNS.copy()


def place_pairs(first: np.ndarray, second: np.ndarray, first_qubits, second_qubits) -> np.ndarray:
    """Put two-qubit vectors on the given qubit pairs of a four-qubit register.

    ``first_qubits=(2, 3)`` means the first tensor factor of ``first`` lives
    on qubit 2 and the second on qubit 3. Returns a 16-dim vector in the
    standard ordering (qubit 1 most significant).
    """
    labels = tuple(first_qubits) + tuple(second_qubits)
    if sorted(labels) != [1, 2, 3, 4]:
        raise BadIndex(f"qubit pairs must partition 1..4, got {first_qubits} and {second_qubits}")
    t = np.multiply.outer(
        np.asarray(first, dtype=complex).reshape(2, 2),
        np.asarray(second, dtype=complex).reshape(2, 2),
    )
    return t.transpose([labels.index(q) for q in (1, 2, 3, 4)]).reshape(16)


def initial_state() -> np.ndarray:
    """``|Psi1>_12 |Psi1>_34`` as a 16-dim vector."""
    psi1 = bell_vector(1)
    return place_pairs(psi1, psi1, (1, 2), (3, 4))


def bell_product(i: int, pairs: str = "12,34") -> np.ndarray:
    """``|Psi_i>|Psi_i>`` on either the (1,2)(3,4) or the (2,3)(1,4) pairing."""
    v = bell_vector(i)
    if pairs == "12,34":
        return place_pairs(v, v, (1, 2), (3, 4))
    if pairs == "23,14":
        return place_pairs(v, v, (2, 3), (1, 4))
    raise ValueError(f"unknown pairing {pairs!r}")


def check_bell_weights(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float).reshape(-1)
    if w.shape != (4,):
        raise BadWeights(f"expected 4 Bell weights, got {w.size}")
    if not np.all(np.isfinite(w)) or np.any(w < -1e-12) or np.any(w > 1 + 1e-12):
        raise BadWeights(f"Bell weights must lie in [0, 1], got {w.tolist()}")
    if abs(w.sum() - 1.0) > 1e-10:
        raise BadWeights(f"Bell weights must sum to 1, got sum {w.sum():.15g}")
    return np.clip(w, 0.0, 1.0)


def bell_diagonal_state(weights) -> np.ndarray:
    """``sum_l w_l |Psi_l><Psi_l|`` for a probability vector ``w``."""
    w = check_bell_weights(weights)
    return bell_diagonal_operator(w)


def bell_diagonal_operator(weights) -> np.ndarray:
    """Bell-diagonal operator with arbitrary real weights (no normalization check)."""
    w = np.asarray(weights, dtype=float)
    return BELL_BASIS.T @ np.diag(w).astype(complex) @ np.conj(BELL_BASIS)


def in_bell_basis(op: np.ndarray) -> np.ndarray:
    """Matrix elements ``<Psi_i| op |Psi_j>``."""
    b = BELL_BASIS.T  # columns are Bell vectors
    return dagger(b) @ np.asarray(op, dtype=complex) @ b


def bell_offdiagonal_norm(op: np.ndarray) -> float:
    m = in_bell_basis(op)
    return float(np.max(np.abs(m - np.diag(np.diag(m)))))


def partial_transpose(rho: np.ndarray) -> np.ndarray:
    """Transpose on the second qubit of a two-qubit operator."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return r.transpose(0, 3, 2, 1).reshape(4, 4)


def is_ppt_separable(rho: np.ndarray, tol: float = 1e-10) -> bool:
    """Peres-Horodecki test; for two qubits PPT is equivalent to separability.

    States on the boundary (minimum partial-transpose eigenvalue within
    ``tol`` of zero) count as separable.
    """
    rho = check_density(rho)
    w, _ = hermitian_eig(partial_transpose(rho))
    return bool(w[0] >= -tol)


def random_unitary_2(rng: np.random.Generator) -> np.ndarray:
    """Random 2x2 unitary from a global phase and three Euler angles (ZYZ)."""
    phase, a, b, c = rng.uniform(0.0, 2.0 * np.pi, size=4)
    rz = lambda t: np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])  # noqa: E731
    ry = np.array(
        [[np.cos(b / 2), -np.sin(b / 2)], [np.sin(b / 2), np.cos(b / 2)]],
        dtype=complex,
    )
    return np.exp(1j * phase) * rz(a) @ ry @ rz(c)
