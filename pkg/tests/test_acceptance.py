"""Exit criteria. Each test prints one PASS/FAIL line (collected in the terminal summary)."""

import time

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from swapinfo.experiments import com_basis, sweep, sweep_point
from swapinfo.linalg import I4, kron
from swapinfo.measure import (
    com_closed_forms,
    direct_info_bell_diagonal,
    info,
    m_value,
    rank2_closed_forms,
    tradeoff_report,
    white_noise_closed_forms,
)
from swapinfo.povm import (
    bell_measurement,
    com_from_basis,
    normalized_element,
    random_povm,
    rank2_family,
    white_noise_family,
)
from swapinfo.states import (
    BELL_PRODUCT_PHASES,
    bell_diagonal_state,
    bell_product,
    bell_sign_matrix,
    bell_vector,
    is_ppt_separable,
    random_unitary_2,
)
from swapinfo.swap import rho14_closed_form, run_swap

GRID = np.round(np.linspace(0.0, 1.0, 101), 12)
SEED = 2024


@pytest.fixture(scope="module")
def random_runs():
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    runs = []
    for _ in range(200):
        povm = random_povm(rng, 4)
        runs.append((povm, run_swap(povm)))
    return runs, time.perf_counter() - start


def test_criterion_1_white_noise_sweep(acceptance):
    start = time.perf_counter()
    rows = sweep("white-noise", 0.0, 1.0, 101)
    elapsed = time.perf_counter() - start

    errs = []
    for r in rows:
        closed = white_noise_closed_forms(r.lam)
        errs += [abs(r.I14_bar - closed["I14"]), abs(r.I12_bar - closed["I12"]),
                 abs(r.I34_bar - closed["I12"])]
    max_err = max(errs)
    ends = (abs(rows[0].I14_bar) <= 1e-9 and abs(rows[0].I12_bar - 2) <= 1e-9
            and abs(rows[-1].I14_bar - 2) <= 1e-9 and abs(rows[-1].I12_bar) <= 1e-9)

    # locate the minimum of the simulated total with a bounded scalar search
    res = minimize_scalar(lambda lam: sweep_point("white-noise", lam).Itot_12,
                          bounds=(0.5, 0.8), method="bounded", options={"xatol": 1e-10})
    at_two_thirds = sweep_point("white-noise", 2 / 3).Itot_12
    grid_argmin = rows[int(np.argmin([r.Itot_12 for r in rows]))].lam
    ok = (
        max_err <= 1e-9
        and ends
        and abs(res.fun - 16 / 9) <= 1e-9
        and abs(at_two_thirds - 16 / 9) <= 1e-9
        and abs(res.x - 2 / 3) <= 1e-4
        and grid_argmin in (0.66, 0.67)
        and all(r.Itot_12 >= at_two_thirds - 1e-12 for r in rows)
        and elapsed < 5.0
    )
    acceptance(1, "white-noise sweep matches closed forms; minimum 16/9 at lambda=2/3", ok,
               f"max err {max_err:.1e}, argmin {res.x:.7f}, min {res.fun:.12f}, {elapsed:.2f}s")


def test_criterion_2_rank2_sweep(acceptance):
    start = time.perf_counter()
    rows = sweep("rank2", 0.0, 1.0, 101)
    elapsed = time.perf_counter() - start
    errs, tot = [], []
    for r in rows:
        closed = rank2_closed_forms(r.lam)
        errs += [abs(r.I14_bar - closed["I14"]), abs(r.I12_bar - closed["I12"]),
                 abs(r.I34_bar - closed["I12"])]
        tot += [abs(r.Itot_12 - 2), abs(r.Itot_34 - 2)]
    ok = max(errs) <= 1e-9 and max(tot) <= 1e-9 and all(r.conserved for r in rows) and elapsed < 5.0
    acceptance(2, "rank-2 sweep matches closed forms; I_tot = 2 everywhere", ok,
               f"max err {max(errs):.1e}, max |Itot-2| {max(tot):.1e}, {elapsed:.2f}s")


def test_criterion_3_bell_measurement_conserves(acceptance):
    rep = tradeoff_report(run_swap(bell_measurement()))
    slacks = [abs(s) for o in rep.per_outcome for s in (o.slack12, o.slack34)]
    ok = max(slacks) <= 1e-9 and rep.conserved_12 and rep.conserved_34
    acceptance(3, "Bell measurement: zero slack on both bipartitions, every outcome", ok,
               f"max |slack| {max(slacks):.1e}")


def test_criterion_4_com_strict(acceptance):
    alphas = np.linspace(0.5, 1.0, 22)[1:-1]
    assert len(alphas) == 20
    worst_err, worst_margin = 0.0, np.inf
    for a2 in alphas:
        closed = com_closed_forms(a2)
        b2 = 1 - a2
        assert closed["I14"] == pytest.approx(1 + 4 * a2 * b2, abs=1e-15)
        records = run_swap(com_from_basis(com_basis(a2)))
        first = records[0]
        i14, i12, i34 = info(first.rho14), info(first.rho12), info(first.rho34)
        worst_err = max(worst_err, abs(i14 - (1 + 4 * a2 * b2)), abs(i12 - (a2 - b2) ** 4),
                        abs(i34 - (a2 - b2) ** 4))
        worst_margin = min(worst_margin, (2 - 1e-6) - (i14 + i12), (2 - 1e-6) - (i14 + i34))
    ok = worst_err <= 1e-9 and worst_margin > 0
    acceptance(4, "COM: simulation matches 1+4a^2b^2 and (a^2-b^2)^4; sum < 2 - 1e-6", ok,
               f"max err {worst_err:.1e}, smallest margin {worst_margin:.2e}")


def test_criterion_5_separability(acceptance):
    lams = np.unique(np.concatenate([np.linspace(0, 1, 301), [1 / 3, 1 / 3 - 1e-7, 1 / 3 + 1e-7]]))
    wn_ok = all(
        all(is_ppt_separable(normalized_element(e)) == (lam <= 1 / 3 + 1e-10) for e in white_noise_family(lam))
        for lam in lams
    )
    r2_sep = [float(lam) for lam in GRID if all(is_ppt_separable(normalized_element(e)) for e in rank2_family(lam))]
    r2_any = [float(lam) for lam in GRID if any(is_ppt_separable(normalized_element(e)) for e in rank2_family(lam))]
    half = run_swap(rank2_family(0.5))
    all_pairs_sep = all(is_ppt_separable(rho) for r in half for rho in (r.rho12, r.rho34, r.rho14))
    conserved = tradeoff_report(half).conserved
    ok = wn_ok and r2_sep == [0.5] and r2_any == [0.5] and all_pairs_sep and conserved
    acceptance(5, "separability thresholds (white noise lambda<=1/3; rank-2 only at 1/2, conserving)", ok,
               f"rank-2 separable at {r2_sep}; all pairs separable at 1/2: {all_pairs_sep}")


def test_criterion_6_oracle_equivalence(acceptance, random_runs):
    runs, elapsed = random_runs
    err14 = max(np.max(np.abs(r.rho14 - rho14_closed_form(e))) for povm, recs in runs for r, e in zip(recs, povm))
    err_p = max(abs(sum(r.probability for r in recs) - 1) for _, recs in runs)
    err_avg = max(np.max(np.abs(sum(r.probability * r.rho14 for r in recs) - I4 / 4)) for _, recs in runs)
    ok = err14 <= 1e-10 and err_p <= 1e-10 and err_avg <= 1e-10 and elapsed < 30.0
    acceptance(6, "200 random POVMs: rho14 = E*/Tr E, sum p = 1, sum p rho14 = I/4", ok,
               f"errs {err14:.1e}/{err_p:.1e}/{err_avg:.1e}, {elapsed:.2f}s")


def test_criterion_7_monogamy(acceptance, random_runs):
    runs, _ = random_runs
    worst = np.inf
    for _, recs in runs:
        rep = tradeoff_report(recs)
        worst = min(worst, *(s for o in rep.per_outcome for s in (o.slack12, o.slack34)),
                    rep.slack12_bar, rep.slack34_bar)
    ok = worst >= -1e-8
    acceptance(7, "monogamy I + I <= 2 per outcome and averaged (200 POVMs)", ok, f"min slack {worst:.2e}")


def test_criterion_8_bell_identities_and_invariance(acceptance):
    mu = bell_sign_matrix()
    errs = []
    for i in range(4):
        lhs = bell_product(i + 1, "12,34")
        rhs = 0.5 * sum(mu[i, l] * bell_product(l + 1, "23,14") for l in range(4))
        errs.append(float(np.max(np.abs(lhs - BELL_PRODUCT_PHASES[i] * rhs))))
    rng = np.random.default_rng(SEED)
    psi1 = bell_vector(1)
    inv = max(np.max(np.abs(kron(u, u.conj()) @ psi1 - psi1)) for u in (random_unitary_2(rng) for _ in range(20)))
    ok = max(errs) <= 1e-12 and inv <= 1e-10
    acceptance(8, "Bell-product identities exact (identity 4 up to global phase -1); U(x)U* invariance", ok,
               f"identity errs {max(errs):.1e}, invariance err {inv:.1e}")


def test_criterion_9_direct_definition(acceptance):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(50):
        rho = bell_diagonal_state(rng.dirichlet(np.ones(4)))
        worst = max(worst, abs(direct_info_bell_diagonal(rho) - m_value(rho)))
    acceptance(9, "direct maximization agrees with M on 50 Bell-diagonal states", worst <= 1e-6,
               f"max diff {worst:.1e}")
