"""Two-qubit POVMs: validation, the measurement families, JSON files.

A POVM here is an ordered collection of 4x4 positive semidefinite
operators summing to the identity. Outcome labels are 1-based when
reported, matching the Bell labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    BadLambda,
    BadSpec,
    NotComplete,
    NotHermitian,
    NotOrthonormal,
    NotPsd,
    ParseError,
    SwapInfoError,
    ValidationFailed,
)
from .linalg import I4, dagger, hermiticity_defect, hermitian_eig
from .states import bell_diagonal_operator, bell_projector

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
COMPLETENESS_TOL = 1e-9


class Povm:
    """Immutable ordered list of 4x4 POVM elements.

    Construction does not validate; call :func:`validate` (or use one of
    the family constructors, which always return valid POVMs).
    """

    __slots__ = ("_elements",)

    def __init__(self, elements):
        arr = np.array([np.asarray(e, dtype=complex) for e in elements], dtype=complex)
        if arr.ndim != 3 or arr.shape[1:] != (4, 4) or arr.shape[0] < 1:
            raise ValueError(f"expected a non-empty list of 4x4 matrices, got shape {arr.shape}")
        arr.setflags(write=False)
        self._elements = arr

    @property
    def elements(self) -> np.ndarray:
        return self._elements

    def __len__(self):
        return self._elements.shape[0]

    def __iter__(self):
        return iter(self._elements)

    def __getitem__(self, k):
        return self._elements[k]

    def __repr__(self):
        return f"Povm({len(self)} elements)"


def validate(povm: Povm) -> None:
    """Raise if ``povm`` is not a POVM; return ``None`` otherwise.

    Each element must be Hermitian (within 1e-10) with eigenvalues >= -1e-10,
    and the elements must sum to the identity within 1e-9 elementwise. The
    raised :class:`NotHermitian`, :class:`NotPsd` or :class:`NotComplete`
    carries the 1-based index of the offending element.
    """
    for k, e in enumerate(povm, start=1):
        defect = hermiticity_defect(e)
        if defect > HERMITIAN_TOL:
            raise NotHermitian(f"not Hermitian (max |E - E^dagger| = {defect:.3g})", index=k)
        w, _ = hermitian_eig(e)
        if w[0] < -PSD_TOL:
            raise NotPsd(f"negative eigenvalue {w[0]:.3g}", index=k)
    total = povm.elements.sum(axis=0)
    dev = float(np.max(np.abs(total - I4)))
    if dev > COMPLETENESS_TOL:
        # report the last element, which is where completion is usually broken
        raise NotComplete(f"elements sum to identity only within {dev:.3g}", index=len(povm))


def normalized_element(element: np.ndarray) -> np.ndarray:
    e = np.asarray(element, dtype=complex)
    return e / np.trace(e).real


def bell_measurement() -> Povm:
    return Povm([bell_projector(i) for i in (1, 2, 3, 4)])


def com_from_basis(basis, tol: float = 1e-10) -> Povm:
    """Complete orthogonal measurement: rank-1 projectors onto ``basis``."""
    vecs = np.array([np.asarray(v, dtype=complex).reshape(-1) for v in basis])
    if vecs.shape != (4, 4):
        raise NotOrthonormal(f"expected four 4-dim vectors, got shape {vecs.shape}")
    gram = np.conj(vecs) @ vecs.T
    if np.max(np.abs(gram - np.eye(4))) > tol:
        raise NotOrthonormal("basis vectors are not orthonormal")
    return Povm([np.outer(v, np.conj(v)) for v in vecs])


def _check_lambda(lam) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise BadLambda(f"lambda must lie in [0, 1], got {lam!r}")
    return lam


def white_noise_family(lam: float) -> Povm:
    """Bell measurement mixed with white noise: ``lam |Psi_i><Psi_i| + (1 - lam) I/4``."""
    lam = _check_lambda(lam)
    return Povm([lam * bell_projector(i) + (1.0 - lam) * I4 / 4.0 for i in (1, 2, 3, 4)])


def rank2_family(lam: float) -> Povm:
    """Rank-two Bell-diagonal measurement pairing Psi1 with Psi2 and Psi3 with Psi4."""
    lam = _check_lambda(lam)
    partner = {1: 2, 2: 1, 3: 4, 4: 3}
    return Povm(
        [lam * bell_projector(i) + (1.0 - lam) * bell_projector(partner[i]) for i in (1, 2, 3, 4)]
    )


@dataclass(frozen=True)
class BellDiagonalPovmSpec:
    """Parameters of the Bell-diagonal family.

    Element ``i`` is ``lam |Psi_i><Psi_i| + (1 - lam) sum_l q[i, l] |Psi_l><Psi_l|``.
    ``q`` must have entries in [0, 1] and each column must sum to 1.
    """

    lam: float
    q: np.ndarray

    def __post_init__(self):
        q = np.array(self.q, dtype=float)
        object.__setattr__(self, "q", q)
        q.setflags(write=False)
        if q.shape != (4, 4):
            raise BadSpec(f"q must be 4x4, got shape {q.shape}")
        try:
            _check_lambda(self.lam)
        except BadLambda as exc:
            raise BadSpec(str(exc)) from exc
        if not np.all(np.isfinite(q)) or q.min() < 0.0 or q.max() > 1.0:
            raise BadSpec("q entries must lie in [0, 1]")
        cols = q.sum(axis=0)
        if np.max(np.abs(cols - 1.0)) > 1e-10:
            raise BadSpec(f"every column of q must sum to 1, got column sums {cols.tolist()}")

    def weights(self) -> np.ndarray:
        """Row ``k`` holds the Bell-basis weights of element ``k``.

        Diagonal entries are ``x_k = lam + (1 - lam) q_kk``; off-diagonal
        ``y_kj = (1 - lam) q_kj``.
        """
        w = (1.0 - self.lam) * self.q
        return w + self.lam * np.eye(4)


def white_noise_spec(lam: float) -> BellDiagonalPovmSpec:
    return BellDiagonalPovmSpec(lam, np.full((4, 4), 0.25))


def rank2_spec(lam: float) -> BellDiagonalPovmSpec:
    q = np.array(
        [
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ],
        dtype=float,
    )
    return BellDiagonalPovmSpec(lam, q)


def bell_diagonal_family(spec: BellDiagonalPovmSpec) -> Povm:
    return Povm([bell_diagonal_operator(row) for row in spec.weights()])


def random_povm(rng: np.random.Generator, k: int = 4) -> Povm:
    """Random k-outcome POVM ``S^-1/2 G_i S^-1/2`` from random PSD ``G_i``."""
    gs = []
    for _ in range(k):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        gs.append(a @ dagger(a))
    w, v = hermitian_eig(sum(gs))
    s_inv_half = (v / np.sqrt(w)) @ dagger(v)
    elements = [s_inv_half @ g @ s_inv_half for g in gs]
    # remove rounding asymmetry
    return Povm([0.5 * (e + dagger(e)) for e in elements])


# --- files -------------------------------------------------------------------


def povm_to_json(povm: Povm) -> str:
    payload = {
        "elements": [
            [[[float(z.real), float(z.imag)] for z in row] for row in e] for e in povm
        ]
    }
    # json writes floats with repr(), which round-trips exactly (17 significant digits)
    return json.dumps(payload, indent=1)


def povm_to_file(povm: Povm, path) -> None:
    Path(path).write_text(povm_to_json(povm) + "\n")


def _parse_entry(entry, where):
    if (
        not isinstance(entry, (list, tuple))
        or len(entry) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
    ):
        raise ParseError(f"{where}: expected [re, im] pair of numbers, got {entry!r}")
    return complex(entry[0], entry[1])


def povm_from_json(text: str, source: str = "<string>") -> Povm:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(payload, dict) or "elements" not in payload:
        raise ParseError(f"{source}: top-level object must have an 'elements' key")
    raw = payload["elements"]
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{source}: 'elements' must be a non-empty list")
    elements = []
    for k, e in enumerate(raw, start=1):
        if not isinstance(e, list) or len(e) != 4:
            raise ParseError(f"{source}: element {k}: expected 4 rows")
        rows = []
        for r, row in enumerate(e, start=1):
            if not isinstance(row, list) or len(row) != 4:
                raise ParseError(f"{source}: element {k} row {r}: expected 4 entries")
            rows.append([_parse_entry(z, f"{source}: element {k} row {r} col {c}")
                         for c, z in enumerate(row, start=1)])
        elements.append(rows)
    povm = Povm(elements)
    try:
        validate(povm)
    except SwapInfoError as exc:
        raise ValidationFailed(exc) from exc
    return povm


def povm_from_file(path) -> Povm:
    path = Path(path)
    return povm_from_json(path.read_text(), source=str(path))


__all__ = [
    "BellDiagonalPovmSpec",
    "Povm",
    "bell_diagonal_family",
    "bell_measurement",
    "com_from_basis",
    "normalized_element",
    "povm_from_file",
    "povm_from_json",
    "povm_to_file",
    "povm_to_json",
    "random_povm",
    "rank2_family",
    "rank2_spec",
    "validate",
    "white_noise_family",
    "white_noise_spec",
]
