"""Information contained in correlations of a two-qubit state, and trade-offs.

The measure is the maximum over mutually unbiased spin-direction pairs
``(n, m)`` of ``<sigma_n (x) sigma_n>**2 + <sigma_m (x) sigma_m>**2``.
For two qubits it equals ``M(rho)``, the sum of the two largest squared
singular values of the Pauli correlation matrix ``T``, and the maximal
CHSH value is ``2 sqrt(M)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .errors import BadLambda, BadSchmidt, EmptyInput, NotBellDiagonal
from .linalg import PAULIS, check_density, kron
from .states import bell_offdiagonal_norm
from .swap import OutcomeRecord

CONSERVATION_TOL = 1e-8

_PAULI_PRODUCTS = np.array([[kron(a, b) for b in PAULIS] for a in PAULIS])


def correlation_matrix(rho: np.ndarray) -> np.ndarray:
    """``T_ij = Tr[rho (sigma_i (x) sigma_j)]`` for i, j in x, y, z."""
    rho = check_density(rho)
    t = np.einsum("ijab,ba->ij", _PAULI_PRODUCTS, rho)
    assert np.max(np.abs(t.imag)) < 1e-10, "correlation matrix has imaginary entries"
    return t.real


def m_value(rho: np.ndarray) -> float:
    """Sum of the two largest eigenvalues of ``T^T T``."""
    t = correlation_matrix(rho)
    u = np.linalg.eigvalsh(t.T @ t)
    return float(u[-1] + u[-2])


def info(rho: np.ndarray) -> float:
    """Information contained in the correlations of ``rho`` (between 0 and 2)."""
    return m_value(rho)


def chsh_max(rho: np.ndarray) -> float:
    """Largest CHSH expectation value attainable on ``rho``."""
    return 2.0 * np.sqrt(max(m_value(rho), 0.0))


def _unbiased_pairs(angles: np.ndarray):
    """First two columns of the ZYZ rotation for each row of ``angles``."""
    a, b, c = np.moveaxis(np.atleast_2d(angles), -1, 0)
    ca, sa, cb, sb, cc, sc = np.cos(a), np.sin(a), np.cos(b), np.sin(b), np.cos(c), np.sin(c)
    n = np.stack([ca * cb * cc - sa * sc, sa * cb * cc + ca * sc, -sb * cc], axis=-1)
    m = np.stack([-ca * cb * sc - sa * cc, -sa * cb * sc + ca * cc, sb * sc], axis=-1)
    return n, m


def _pair_objective(t: np.ndarray, angles: np.ndarray) -> np.ndarray:
    n, m = _unbiased_pairs(angles)
    tn = np.einsum("ki,ij,kj->k", n, t, n)
    tm = np.einsum("ki,ij,kj->k", m, t, m)
    return tn**2 + tm**2


def direct_info_bell_diagonal(rho: np.ndarray, grid_density: int = 60) -> float:
    """Brute-force maximization of the defining expression for Bell-diagonal ``rho``.

    Searches a ``grid_density**3`` grid of Euler angles, then polishes the
    best few grid points with Nelder-Mead.
    """
    rho = check_density(rho)
    off = bell_offdiagonal_norm(rho)
    if off > 1e-10:
        raise NotBellDiagonal(f"state has Bell-basis off-diagonal elements up to {off:.3g}")
    t = correlation_matrix(rho)

    g = int(grid_density)
    az = np.linspace(0.0, 2.0 * np.pi, g, endpoint=False)
    polar = np.linspace(0.0, np.pi, g)
    grid = np.stack(np.meshgrid(az, polar, az, indexing="ij"), axis=-1).reshape(-1, 3)
    values = _pair_objective(t, grid)

    best = float(values.max())
    for idx in np.argsort(values)[-3:]:
        res = minimize(
            lambda x: -_pair_objective(t, x)[0],
            grid[idx],
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-15, "maxiter": 4000},
        )
        best = max(best, -float(res.fun))
    return best


# --- trade-off bookkeeping ---------------------------------------------------


@dataclass(frozen=True)
class OutcomeTradeoff:
    outcome: int
    p: float
    I14: Optional[float]
    I12: Optional[float]
    I34: Optional[float]

    @property
    def slack12(self) -> Optional[float]:
        return None if self.I14 is None else 2.0 - self.I12 - self.I14

    @property
    def slack34(self) -> Optional[float]:
        return None if self.I14 is None else 2.0 - self.I34 - self.I14


@dataclass(frozen=True)
class TradeoffReport:
    per_outcome: list[OutcomeTradeoff]
    I14_bar: float
    I12_bar: float
    I34_bar: float

    @property
    def slack12_bar(self) -> float:
        return 2.0 - self.I12_bar - self.I14_bar

    @property
    def slack34_bar(self) -> float:
        return 2.0 - self.I34_bar - self.I14_bar

    @property
    def conserved_12(self) -> bool:
        return abs(self.slack12_bar) <= CONSERVATION_TOL

    @property
    def conserved_34(self) -> bool:
        return abs(self.slack34_bar) <= CONSERVATION_TOL

    @property
    def conserved(self) -> bool:
        return self.conserved_12 and self.conserved_34


def tradeoff_report(records: list[OutcomeRecord]) -> TradeoffReport:
    """Per-outcome information values and their probability-weighted averages."""
    if not records:
        raise EmptyInput("no outcome records")
    rows = []
    for r in records:
        if r.zero_probability:
            rows.append(OutcomeTradeoff(r.outcome, r.probability, None, None, None))
        else:
            rows.append(
                OutcomeTradeoff(r.outcome, r.probability, info(r.rho14), info(r.rho12), info(r.rho34))
            )
    live = [row for row in rows if row.I14 is not None]
    p = np.array([row.p for row in live])

    def avg(attr):
        return float(np.dot(p, [getattr(row, attr) for row in live]))

    return TradeoffReport(rows, avg("I14"), avg("I12"), avg("I34"))


# --- closed forms ------------------------------------------------------------


def _check_lambda(lam) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise BadLambda(f"lambda must lie in [0, 1], got {lam!r}")
    return lam


def com_closed_forms(alpha_sq: float) -> dict:
    """(1,4) and (m,m+1) information after projecting onto ``alpha|00> + beta|11>``.

    ``alpha_sq`` is the larger squared Schmidt coefficient.
    """
    a2 = float(alpha_sq)
    if not 0.5 <= a2 <= 1.0:
        raise BadSchmidt(f"alpha_sq must lie in [0.5, 1], got {alpha_sq!r}")
    b2 = 1.0 - a2
    return {"I14": 1.0 + 4.0 * a2 * b2, "I12": (a2 - b2) ** 4}


def white_noise_closed_forms(lam: float) -> dict:
    lam = _check_lambda(lam)
    residual = 0.5 * (1.0 - lam + np.sqrt((1.0 - lam) * (1.0 + 3.0 * lam))) ** 2
    return {"I14": 2.0 * lam**2, "I12": float(residual)}


def rank2_closed_forms(lam: float) -> dict:
    lam = _check_lambda(lam)
    return {"I14": 1.0 + (2.0 * lam - 1.0) ** 2, "I12": 4.0 * lam * (1.0 - lam)}
