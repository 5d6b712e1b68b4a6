"""Generalized entanglement swapping on two Bell pairs.

Qubits (1,2) and (3,4) start in ``|Psi1>|Psi1>``. A POVM acts on (2,3);
for each outcome we report the probability and the post-measurement
two-qubit states of the pairs (1,4), (1,2) and (3,4).

Two routes are provided: an explicit 16-dimensional simulation (the
reference path, used by :func:`run_swap`) and the closed forms for
``rho_14`` and for the Bell-diagonal family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BadIndex, InvalidPovm, SwapInfoError, ZeroProbability
from .linalg import (
    conjugate_in_computational_basis,
    embed_pair_23,
    psd_sqrt,
    reduced_density,
)
from .povm import BellDiagonalPovmSpec, Povm, validate
from .states import BELL_SIGNS, initial_state

ZERO_TRACE_TOL = 1e-12
ZERO_PROBABILITY_TOL = 1e-12


def outcome_probability(element: np.ndarray) -> float:
    """``p_k = <Phi| E (x) I |Phi> = Tr(E) / 4``."""
    tr = np.trace(np.asarray(element, dtype=complex))
    assert abs(tr.imag) < 1e-12, f"trace of a POVM element has imaginary part {tr.imag:.3g}"
    return float(tr.real) / 4.0


def post_measurement_state(element: np.ndarray) -> np.ndarray:
    """Normalized ``(sqrt(E) on qubits 2,3) |Phi> / sqrt(p)``."""
    element = np.asarray(element, dtype=complex)
    tr = np.trace(element).real
    if tr <= ZERO_TRACE_TOL:
        raise ZeroProbability(f"element has trace {tr:.3g}; outcome never occurs")
    p = tr / 4.0
    phi = embed_pair_23(psd_sqrt(element)) @ initial_state()
    return phi / np.sqrt(p)


def rho14_closed_form(element: np.ndarray) -> np.ndarray:
    """``rho_14 = E^* / Tr(E)`` with conjugation in the computational basis."""
    element = np.asarray(element, dtype=complex)
    tr = np.trace(element).real
    if tr <= ZERO_TRACE_TOL:
        raise ZeroProbability(f"element has trace {tr:.3g}; outcome never occurs")
    return conjugate_in_computational_basis(element) / tr


def bell_diagonal_reduced_closed_form(spec: BellDiagonalPovmSpec, k: int) -> np.ndarray:
    """Bell weights of ``rho_12`` (equivalently ``rho_34``) after outcome ``k``.

    With ``w`` the Bell weights of element ``k`` (``x_k`` on the diagonal,
    ``y_kj`` elsewhere), ``gamma_l = sum_j sqrt(w_j) mu_jl`` and the weights
    are ``gamma_l**2 / (16 p_k)``.
    """
    if isinstance(k, bool) or int(k) != k or not 1 <= int(k) <= 4:
        raise BadIndex(f"outcome index must be 1..4, got {k!r}")
    w = spec.weights()[int(k) - 1]
    p = w.sum() / 4.0
    if p < ZERO_PROBABILITY_TOL:
        raise ZeroProbability(f"outcome {k} has probability {p:.3g}")
    gamma = np.sqrt(w) @ BELL_SIGNS
    return gamma**2 / (16.0 * p)


@dataclass(frozen=True)
class OutcomeRecord:
    """One outcome of a swap run. States are ``None`` when the outcome cannot occur."""

    outcome: int
    probability: float
    rho14: Optional[np.ndarray]
    rho12: Optional[np.ndarray]
    rho34: Optional[np.ndarray]

    @property
    def zero_probability(self) -> bool:
        return self.rho14 is None


def _outcome(k: int, element: np.ndarray) -> OutcomeRecord:
    p = outcome_probability(element)
    if p < ZERO_PROBABILITY_TOL:
        return OutcomeRecord(k, max(p, 0.0), None, None, None)
    phi = post_measurement_state(element)
    return OutcomeRecord(
        outcome=k,
        probability=p,
        rho14=reduced_density(phi, (1, 4)),
        rho12=reduced_density(phi, (1, 2)),
        rho34=reduced_density(phi, (3, 4)),
    )


def run_swap(povm: Povm) -> list[OutcomeRecord]:
    """Simulate the protocol for every outcome of ``povm`` (outcomes labelled from 1)."""
    if not isinstance(povm, Povm):
        povm = Povm(povm)
    try:
        validate(povm)
    except SwapInfoError as exc:
        raise InvalidPovm(exc) from exc
    return [_outcome(k, e) for k, e in enumerate(povm, start=1)]
