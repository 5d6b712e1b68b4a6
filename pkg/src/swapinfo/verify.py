"""Randomized invariant checks over every module.

Each check takes a seeded generator and a trial count and returns ``None``
on success or a :class:`Counterexample` describing the first failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import measure as _info
from .experiments import com_comparison
from .linalg import (
    I4,
    dagger,
    hermitian_eig,
    kron,
    psd_sqrt,
    reduced_density,
)
from .povm import (
    BellDiagonalPovmSpec,
    Povm,
    bell_diagonal_family,
    bell_measurement,
    povm_to_json,
    random_povm,
    rank2_family,
    rank2_spec,
    validate,
    white_noise_family,
    white_noise_spec,
)
from .states import (
    BELL_PRODUCT_PHASES,
    BELL_SIGNS,
    bell_diagonal_state,
    bell_offdiagonal_norm,
    bell_product,
    bell_vector,
    in_bell_basis,
    is_ppt_separable,
    random_unitary_2,
)
from .swap import bell_diagonal_reduced_closed_form, rho14_closed_form, run_swap


@dataclass
class Counterexample:
    message: str
    povm: Optional[Povm] = None
    state: Optional[np.ndarray] = None
    extra: dict = field(default_factory=dict)

    def to_json(self, check: str) -> str:
        payload = {"check": check, "message": self.message, **self.extra}
        if self.povm is not None:
            payload["povm"] = json.loads(povm_to_json(self.povm))
        if self.state is not None:
            s = np.asarray(self.state, dtype=complex)
            payload["state"] = np.stack([s.real, s.imag], axis=-1).tolist()
        return json.dumps(payload, indent=1)


Check = Callable[[np.random.Generator, int], Optional[Counterexample]]


def _random_matrix(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def _random_bell_spec(rng) -> BellDiagonalPovmSpec:
    q = rng.dirichlet(np.ones(4), size=4).T  # columns sum to 1
    return BellDiagonalPovmSpec(float(rng.uniform()), q)


# --- linear algebra ----------------------------------------------------------


def check_linalg(rng, trials):
    for _ in range(trials):
        a, b, c = (_random_matrix(rng, 2) for _ in range(3))
        if np.max(np.abs(kron(kron(a, b), c) - kron(a, kron(b, c)))) > 1e-12:
            return Counterexample("kron is not associative")
        h = _random_matrix(rng, 4)
        h = h + dagger(h)
        w, v = hermitian_eig(h)
        if np.max(np.abs((v * w) @ dagger(v) - h)) > 1e-9:
            return Counterexample("eigendecomposition does not reconstruct", state=h)
        p = h @ dagger(h)
        s = psd_sqrt(p)
        if np.max(np.abs(s @ s - p)) > 1e-9:
            return Counterexample("psd_sqrt squared differs from input", state=p)
        psi = rng.normal(size=16) + 1j * rng.normal(size=16)
        psi /= np.linalg.norm(psi)
        for keep in ((1, 2), (1, 4), (3, 4), (2, 3)):
            rho = reduced_density(psi, keep)
            if abs(np.trace(rho) - 1) > 1e-10 or np.linalg.eigvalsh(rho)[0] < -1e-10:
                return Counterexample(f"reduced state on {keep} is not a density matrix", state=psi)
    return None


# --- states ------------------------------------------------------------------


def check_states(rng, trials):
    psi1 = bell_vector(1)
    for _ in range(max(trials, 20)):
        u = random_unitary_2(rng)
        if np.max(np.abs(kron(u, np.conj(u)) @ psi1 - psi1)) > 1e-10:
            return Counterexample("Psi1 is not U (x) U* invariant", state=u)
    for i in range(4):
        lhs = bell_product(i + 1, "12,34")
        rhs = 0.5 * BELL_PRODUCT_PHASES[i] * sum(
            BELL_SIGNS[i, l] * bell_product(l + 1, "23,14") for l in range(4)
        )
        if np.max(np.abs(lhs - rhs)) > 1e-12:
            return Counterexample(f"Bell product identity {i + 1} fails")
    for _ in range(trials):
        w = rng.dirichlet(np.ones(4))
        rho = bell_diagonal_state(w)
        if np.linalg.eigvalsh(rho)[0] < -1e-10 or abs(np.trace(rho) - 1) > 1e-10:
            return Counterexample("Bell-diagonal state is invalid", state=rho)
        # pure states: entangled iff both Schmidt coefficients are nonzero
        x, y = rng.normal(size=2) + 1j * rng.normal(size=2), rng.normal(size=2) + 1j * rng.normal(size=2)
        prod = np.kron(x, y)
        prod /= np.linalg.norm(prod)
        if not is_ppt_separable(np.outer(prod, np.conj(prod))):
            return Counterexample("product pure state classified entangled", state=prod)
        ent = rng.normal(size=4) + 1j * rng.normal(size=4)
        ent /= np.linalg.norm(ent)
        schmidt = np.linalg.svd(ent.reshape(2, 2), compute_uv=False)
        if schmidt[-1] > 1e-6 and is_ppt_separable(np.outer(ent, np.conj(ent))):
            return Counterexample("entangled pure state classified separable", state=ent)
    return None


# --- POVMs -------------------------------------------------------------------


def check_povm(rng, trials):
    for _ in range(trials):
        lam = float(rng.uniform())
        spec = _random_bell_spec(rng)
        for povm in (white_noise_family(lam), rank2_family(lam), bell_diagonal_family(spec),
                     random_povm(rng)):
            try:
                validate(povm)
            except ValueError as exc:
                return Counterexample(f"family output failed validation: {exc}", povm=povm)
        if np.max(np.abs(bell_diagonal_family(spec).elements.sum(axis=0) - I4)) > 1e-10:
            return Counterexample("Bell-diagonal family is incomplete", povm=bell_diagonal_family(spec))
        wn = white_noise_family(lam)
        spectra = [np.linalg.eigvalsh(e) for e in wn]
        if max(np.max(np.abs(s - spectra[0])) for s in spectra) > 1e-12:
            return Counterexample("white-noise elements have different spectra", povm=wn)
    return None


# --- swap engine -------------------------------------------------------------


def check_swap(rng, trials):
    for _ in range(trials):
        povm = random_povm(rng)
        records = run_swap(povm)
        ps = np.array([r.probability for r in records])
        if abs(ps.sum() - 1) > 1e-10:
            return Counterexample("outcome probabilities do not sum to 1", povm=povm)
        avg14 = sum(r.probability * r.rho14 for r in records)
        if np.max(np.abs(avg14 - I4 / 4)) > 1e-10:
            return Counterexample("averaged rho14 is not maximally mixed", povm=povm)
        for r, e in zip(records, povm):
            if np.max(np.abs(r.rho14 - rho14_closed_form(e))) > 1e-10:
                return Counterexample(f"rho14 closed form fails at outcome {r.outcome}", povm=povm)

        spec = _random_bell_spec(rng)
        povm = bell_diagonal_family(spec)
        for r in run_swap(povm):
            if r.zero_probability:
                continue
            for rho in (r.rho12, r.rho34):
                if bell_offdiagonal_norm(rho) > 1e-10:
                    return Counterexample("reduced state is not Bell-diagonal", povm=povm)
                tau = bell_diagonal_reduced_closed_form(spec, r.outcome)
                if np.max(np.abs(in_bell_basis(rho).diagonal().real - tau)) > 1e-10:
                    return Counterexample(f"Bell-diagonal closed form fails at outcome {r.outcome}",
                                          povm=povm)
            if np.max(np.abs(r.rho12 - r.rho34)) > 1e-10:
                return Counterexample(f"rho12 != rho34 at outcome {r.outcome}", povm=povm)

    for r in run_swap(bell_measurement()):
        if abs(np.trace(r.rho14 @ r.rho14).real - 1) > 1e-10 or abs(_info.info(r.rho14) - 2) > 1e-9:
            return Counterexample("Bell measurement does not swap a maximally entangled pair")
    return None


# --- information measure -----------------------------------------------------


def make_monogamy_check(bound: float = 2.0, tol: float = 1e-8) -> Check:
    def check_monogamy(rng, trials):
        for _ in range(trials):
            povm = random_povm(rng)
            report = _info.tradeoff_report(run_swap(povm))
            pairs = [(o.I12, o.I14) for o in report.per_outcome] + [
                (o.I34, o.I14) for o in report.per_outcome
            ]
            pairs += [(report.I12_bar, report.I14_bar), (report.I34_bar, report.I14_bar)]
            for a, b in pairs:
                if a + b > bound + tol:
                    return Counterexample(f"monogamy violated: {a:.12g} + {b:.12g} > {bound}", povm=povm)
        return None

    return check_monogamy


def check_info(rng, trials):
    grid = np.linspace(0.0, 1.0, 21)
    for lam in grid:
        for povm, closed, spec in (
            (white_noise_family(lam), _info.white_noise_closed_forms(lam), white_noise_spec(lam)),
            (rank2_family(lam), _info.rank2_closed_forms(lam), rank2_spec(lam)),
        ):
            for r in run_swap(povm):
                i14, i12, i34 = _info.info(r.rho14), _info.info(r.rho12), _info.info(r.rho34)
                if max(abs(i14 - closed["I14"]), abs(i12 - closed["I12"]), abs(i34 - closed["I12"])) > 1e-9:
                    return Counterexample(f"closed form mismatch at lambda={lam}", povm=povm)
                for rho, val in ((r.rho14, i14), (r.rho12, i12), (r.rho34, i34)):
                    if is_ppt_separable(rho) and val > 1 + 1e-9:
                        return Counterexample("separable state carries more than 1", state=rho)
                tau = bell_diagonal_reduced_closed_form(spec, r.outcome)
                if abs(_info.info(bell_diagonal_state(tau)) - i12) > 1e-9:
                    return Counterexample("tau weights give a different information value", povm=povm)
    for _ in range(trials):
        povm = random_povm(rng)
        for r in run_swap(povm):
            for rho in (r.rho14, r.rho12):
                v = _info.info(rho)
                if abs(_info.chsh_max(rho) ** 2 / 4 - v) > 1e-12:
                    return Counterexample("CHSH relation fails", state=rho)
                if not -1e-12 <= v <= 2 + 1e-9:
                    return Counterexample("information outside [0, 2]", state=rho)
    return None


def check_direct_definition(rng, trials):
    # the brute-force maximization is the slow part; a handful of draws is enough
    for _ in range(min(trials, 10)):
        rho = bell_diagonal_state(rng.dirichlet(np.ones(4)))
        direct = _info.direct_info_bell_diagonal(rho, grid_density=30)
        if abs(direct - _info.m_value(rho)) > 1e-6:
            return Counterexample("direct maximization disagrees with M", state=rho)
    return None


def check_com(rng, trials):
    for a2 in np.linspace(0.5, 1.0, 20):
        cmp = com_comparison(a2)
        if max(abs(cmp["I14_diff"]), abs(cmp["I12_diff"])) > 1e-9:
            return Counterexample(f"COM closed forms mismatch at alpha_sq={a2}", extra={"alpha_sq": a2})
    return None


DEFAULT_CHECKS: dict[str, Check] = {
    "linalg": check_linalg,
    "states": check_states,
    "povm": check_povm,
    "swap": check_swap,
    "monogamy": make_monogamy_check(),
    "info": check_info,
    "direct-definition": check_direct_definition,
    "com": check_com,
}


@dataclass
class VerifyResult:
    results: list  # (name, passed, message)
    failure: Optional[tuple] = None  # (name, Counterexample)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def summary(self) -> str:
        lines = [f"{'PASS' if ok else 'FAIL'} {name}{': ' + msg if msg else ''}"
                 for name, ok, msg in self.results]
        n_ok = sum(ok for _, ok, _ in self.results)
        lines.append(f"{n_ok}/{len(self.results)} checks passed")
        return "\n".join(lines)


def run_verification(seed: int, trials: int, checks: Optional[dict] = None) -> VerifyResult:
    """Run every check with its own generator derived from ``seed``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    checks = DEFAULT_CHECKS if checks is None else checks
    results, failure = [], None
    for i, (name, check) in enumerate(checks.items()):
        rng = np.random.default_rng([int(seed), i])
        cx = check(rng, int(trials))
        results.append((name, cx is None, "" if cx is None else cx.message))
        if cx is not None and failure is None:
            failure = (name, cx)
    return VerifyResult(results, failure)
