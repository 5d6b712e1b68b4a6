"""Parameter sweeps, the COM comparison and single-POVM inspection.

Everything here runs the full 16-dim simulation (:func:`run_swap`) and
then evaluates the information measure on the resulting reduced states.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import BadRange, BadSchmidt, BadSpec
from .measure import com_closed_forms, tradeoff_report
from .povm import (
    BellDiagonalPovmSpec,
    Povm,
    bell_diagonal_family,
    com_from_basis,
    normalized_element,
    rank2_family,
    white_noise_family,
)
from .states import is_ppt_separable
from .swap import run_swap

FAMILIES = ("white-noise", "rank2", "bell-diagonal-custom")
CSV_HEADER = ("lambda", "I14", "I12", "I34", "Itot12", "Itot34", "conserved")


@dataclass(frozen=True)
class SweepRow:
    lam: float
    I14_bar: float
    I12_bar: float
    I34_bar: float
    conserved: bool

    @property
    def Itot_12(self) -> float:
        return self.I12_bar + self.I14_bar

    @property
    def Itot_34(self) -> float:
        return self.I34_bar + self.I14_bar


def family_povm(family: str, lam: float, q=None) -> Povm:
    if family == "white-noise":
        return white_noise_family(lam)
    if family == "rank2":
        return rank2_family(lam)
    if family == "bell-diagonal-custom":
        if q is None:
            raise BadSpec("the bell-diagonal-custom family needs a q matrix")
        return bell_diagonal_family(BellDiagonalPovmSpec(lam, q))
    raise BadSpec(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def lambda_grid(lambda_min: float, lambda_max: float, steps: int) -> np.ndarray:
    if not 0.0 <= lambda_min <= lambda_max <= 1.0:
        raise BadRange(f"need 0 <= lambda_min <= lambda_max <= 1, got [{lambda_min}, {lambda_max}]")
    if int(steps) != steps or steps < 2:
        raise BadRange(f"steps must be an integer >= 2, got {steps!r}")
    return np.linspace(lambda_min, lambda_max, int(steps))


def sweep_point(family: str, lam: float, q=None) -> SweepRow:
    report = tradeoff_report(run_swap(family_povm(family, lam, q)))
    return SweepRow(float(lam), report.I14_bar, report.I12_bar, report.I34_bar, report.conserved)


def sweep(family: str, lambda_min: float = 0.0, lambda_max: float = 1.0, steps: int = 101,
          q=None) -> list[SweepRow]:
    return [sweep_point(family, lam, q) for lam in lambda_grid(lambda_min, lambda_max, steps)]


def format_number(x: float) -> str:
    """At most 12 significant digits, shortest form."""
    return f"{float(x):.12g}"


def sweep_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [format_number(v) for v in (r.lam, r.I14_bar, r.I12_bar, r.I34_bar, r.Itot_12, r.Itot_34)]
            + ["true" if r.conserved else "false"]
        )
    return buf.getvalue()


def read_sweep_csv(text: str) -> list[dict]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        row = {k: float(v) for k, v in rec.items() if k != "conserved"}
        row["conserved"] = rec["conserved"] == "true"
        rows.append(row)
    return rows


# --- complete orthogonal measurements -----------------------------------------


def com_basis(alpha_sq: float) -> list[np.ndarray]:
    """Orthonormal basis whose first vector is ``alpha|00> + beta|11>``.

    The other three vectors share the same Schmidt coefficients.
    """
    a2 = float(alpha_sq)
    if not 0.5 <= a2 <= 1.0:
        raise BadSchmidt(f"alpha_sq must lie in [0.5, 1], got {alpha_sq!r}")
    a, b = np.sqrt(a2), np.sqrt(1.0 - a2)
    return [
        np.array([a, 0, 0, b], dtype=complex),
        np.array([b, 0, 0, -a], dtype=complex),
        np.array([0, a, b, 0], dtype=complex),
        np.array([0, b, -a, 0], dtype=complex),
    ]


def com_comparison(alpha_sq: float) -> dict:
    """Simulated vs closed-form information for the outcome ``alpha|00> + beta|11>``."""
    closed = com_closed_forms(alpha_sq)
    records = run_swap(com_from_basis(com_basis(alpha_sq)))
    report = tradeoff_report(records)
    first = report.per_outcome[0]
    out = {
        "alpha_sq": float(alpha_sq),
        "probability": first.p,
        "I14": first.I14,
        "I12": first.I12,
        "I34": first.I34,
        "I14_closed": closed["I14"],
        "I12_closed": closed["I12"],
    }
    out["I14_diff"] = out["I14"] - out["I14_closed"]
    out["I12_diff"] = out["I12"] - out["I12_closed"]
    out["Itot12"] = out["I14"] + out["I12"]
    out["I14_bar"] = report.I14_bar
    out["I12_bar"] = report.I12_bar
    out["conserved"] = report.conserved
    return out


# --- inspection --------------------------------------------------------------


def inspect_povm(povm: Povm) -> dict:
    """Per-outcome probabilities, information values, slacks and PPT flags."""
    records = run_swap(povm)
    report = tradeoff_report(records)
    outcomes = []
    for rec, row, element in zip(records, report.per_outcome, povm):
        entry = {"outcome": rec.outcome, "p": rec.probability}
        if rec.zero_probability:
            entry["zero_probability"] = True
        else:
            entry.update(
                I14=row.I14,
                I12=row.I12,
                I34=row.I34,
                slack12=row.slack12,
                slack34=row.slack34,
                element_separable=is_ppt_separable(normalized_element(element)),
                rho14_separable=is_ppt_separable(rec.rho14),
                rho12_separable=is_ppt_separable(rec.rho12),
                rho34_separable=is_ppt_separable(rec.rho34),
            )
        outcomes.append(entry)
    return {
        "outcomes": outcomes,
        "averaged": {
            "I14_bar": report.I14_bar,
            "I12_bar": report.I12_bar,
            "I34_bar": report.I34_bar,
            "slack12_bar": report.slack12_bar,
            "slack34_bar": report.slack34_bar,
            "conserved_12": report.conserved_12,
            "conserved_34": report.conserved_34,
        },
    }
