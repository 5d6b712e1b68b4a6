import io
import json

import numpy as np
import pytest

from swapinfo import cli, verify
from swapinfo.experiments import (
    com_basis,
    com_comparison,
    read_sweep_csv,
    sweep,
    sweep_csv,
)
from swapinfo.errors import BadRange, BadSchmidt, BadSpec
from swapinfo.measure import com_closed_forms
from swapinfo.povm import Povm, bell_measurement, povm_to_file, rank2_family


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


# --- sweep -------------------------------------------------------------------


def test_sweep_white_noise_endpoints(tmp_path):
    path = tmp_path / "wn.csv"
    code, _ = run(["sweep", "--family", "white-noise", "--steps", "101", "--out", str(path)])
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[0] == "lambda,I14,I12,I34,Itot12,Itot34,conserved"
    rows = read_sweep_csv(text)
    assert len(rows) == 101
    assert rows[0]["lambda"] == 0 and abs(rows[0]["I14"]) < 1e-9 and abs(rows[0]["I12"] - 2) < 1e-9
    assert rows[-1]["lambda"] == 1 and abs(rows[-1]["I14"] - 2) < 1e-9 and abs(rows[-1]["I12"]) < 1e-9
    assert rows[0]["conserved"] and rows[-1]["conserved"]
    assert not any(r["conserved"] for r in rows[1:-1])
    near = {round(r["lambda"], 2): r["Itot12"] for r in rows}
    assert near[0.66] > 16 / 9 and near[0.67] > 16 / 9
    assert min(r["Itot12"] for r in rows) in (near[0.66], near[0.67])


def test_sweep_rank2_conserved():
    rows = sweep("rank2", 0, 1, 101)
    for r in rows:
        assert abs(r.Itot_12 - 2) < 1e-9 and r.conserved


def test_sweep_row_invariants():
    for r in sweep("white-noise", 0, 1, 21):
        assert r.Itot_12 == r.I12_bar + r.I14_bar
        assert r.Itot_34 == r.I34_bar + r.I14_bar
        assert 2 - r.Itot_12 >= -1e-8 and 2 - r.Itot_34 >= -1e-8


def test_sweep_csv_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run(["sweep", "--family", "rank2", "--steps", "11", "--out", str(p)])[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_csv_number_format():
    text = sweep_csv(sweep("white-noise", 0.5, 0.5, 2))
    line = text.splitlines()[1].split(",")
    assert line[0] == "0.5"
    assert all(len(x.replace("-", "").replace(".", "").lstrip("0").split("e")[0]) <= 12 for x in line[:-1])


def test_sweep_custom_family(tmp_path):
    qpath = tmp_path / "q.json"
    qpath.write_text(json.dumps(np.full((4, 4), 0.25).tolist()))
    code, out = run(["sweep", "--family", "bell-diagonal-custom", "--steps", "5", "--q", str(qpath)])
    assert code == 0
    custom = read_sweep_csv(out)
    _, out_wn = run(["sweep", "--family", "white-noise", "--steps", "5"])
    for a, b in zip(custom, read_sweep_csv(out_wn)):
        assert a["Itot12"] == pytest.approx(b["Itot12"], abs=1e-12)


def test_sweep_errors(tmp_path):
    with pytest.raises(BadRange):
        sweep("rank2", 0.5, 0.2, 10)
    with pytest.raises(BadRange):
        sweep("rank2", 0, 1, 1)
    with pytest.raises(BadSpec):
        sweep("bell-diagonal-custom", 0, 1, 3)
    assert run(["sweep", "--family", "rank2", "--lambda-max", "1.5"])[0] == 1
    assert run(["sweep", "--family", "bell-diagonal-custom"])[0] == 1
    assert run(["sweep", "--family", "rank2", "--out", str(tmp_path / "missing" / "x.csv")])[0] == 1


# --- inspect -----------------------------------------------------------------


def test_inspect_bell(tmp_path):
    path = tmp_path / "bell.json"
    povm_to_file(bell_measurement(), path)
    code, out = run(["inspect", "--povm", str(path)])
    assert code == 0
    assert "conserved: yes" in out
    code, out = run(["inspect", "--povm", str(path), "--format", "json"])
    report = json.loads(out)
    assert len(report["outcomes"]) == 4
    for o in report["outcomes"]:
        assert o["p"] == pytest.approx(0.25)
        assert abs(o["slack12"]) < 1e-9 and abs(o["slack34"]) < 1e-9
        assert not o["element_separable"] and not o["rho14_separable"]
    assert report["averaged"]["conserved_12"] and report["averaged"]["conserved_34"]


def test_inspect_rank2_half_is_separable_and_conserved(tmp_path):
    path = tmp_path / "r2.json"
    povm_to_file(rank2_family(0.5), path)
    code, out = run(["inspect", "--povm", str(path), "--format", "json"])
    report = json.loads(out)
    for o in report["outcomes"]:
        assert o["element_separable"]
        assert o["rho14_separable"] and o["rho12_separable"] and o["rho34_separable"]
    assert report["averaged"]["conserved_12"] and report["averaged"]["conserved_34"]


def test_inspect_errors(tmp_path):
    bad = tmp_path / "double.json"
    povm_to_file(Povm([2 * e for e in bell_measurement()]), bad)
    assert run(["inspect", "--povm", str(bad)])[0] == 1
    junk = tmp_path / "junk.json"
    junk.write_text("{oops")
    assert run(["inspect", "--povm", str(junk)])[0] == 1
    assert run(["inspect", "--povm", str(tmp_path / "nope.json")])[0] == 1


def test_inspect_zero_probability_outcome(tmp_path):
    path = tmp_path / "z.json"
    povm_to_file(Povm([np.eye(4), np.zeros((4, 4))]), path)
    code, out = run(["inspect", "--povm", str(path)])
    assert code == 0 and "zero probability" in out


# --- com ---------------------------------------------------------------------


def test_com_basis_is_orthonormal():
    for a2 in (0.5, 0.7, 1.0):
        b = np.array(com_basis(a2))
        np.testing.assert_allclose(b.conj() @ b.T, np.eye(4), atol=1e-15)
    with pytest.raises(BadSchmidt):
        com_basis(0.3)


@pytest.mark.parametrize("a2, i14, i12", [(0.5, 2.0, 0.0), (0.75, 1.75, 0.0625), (0.9, 1.36, 0.4096)])
def test_com_examples(a2, i14, i12):
    cmp = com_comparison(a2)
    assert cmp["I14"] == pytest.approx(i14, abs=1e-9)
    assert cmp["I12"] == pytest.approx(i12, abs=1e-9)
    code, out = run(["com", "--alpha-sq", str(a2), "--format", "json"])
    assert code == 0 and json.loads(out)["I14_closed"] == pytest.approx(i14, abs=1e-12)


def test_com_oracle_matches_closed_forms():
    for a2 in np.linspace(0.5, 1, 20):
        cmp = com_comparison(a2)
        closed = com_closed_forms(a2)
        assert abs(cmp["I14"] - closed["I14"]) < 1e-9
        assert abs(cmp["I12"] - closed["I12"]) < 1e-9
        assert abs(cmp["I34"] - closed["I12"]) < 1e-9


def test_com_table_and_errors():
    code, out = run(["com", "--alpha-sq", "0.75"])
    assert code == 0 and "I14" in out and "closed_form" in out
    assert run(["com", "--alpha-sq", "0.2"])[0] == 1


# --- verify ------------------------------------------------------------------


def test_verify_passes_and_is_deterministic(tmp_path):
    dump = tmp_path / "cx.json"
    args = ["verify", "--seed", "42", "--trials", "20", "--dump", str(dump)]
    code1, out1 = run(args)
    code2, out2 = run(args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "8/8 checks passed" in out1
    assert not dump.exists()


def test_verify_corrupted_monogamy(tmp_path, monkeypatch):
    checks = dict(verify.DEFAULT_CHECKS)
    checks["monogamy"] = verify.make_monogamy_check(bound=0.5)
    monkeypatch.setattr(verify, "DEFAULT_CHECKS", checks)
    dump = tmp_path / "cx.json"
    code, out = run(["verify", "--seed", "1", "--trials", "3", "--dump", str(dump)])
    assert code == 2
    assert "FAIL monogamy" in out
    payload = json.loads(dump.read_text())
    assert payload["check"] == "monogamy"
    assert np.array(payload["povm"]["elements"]).shape == (4, 4, 4, 2)


def test_verify_bad_trials():
    assert run(["verify", "--trials", "0"])[0] == 1


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "swapinfo", "com", "--alpha-sq", "0.5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "I14" in res.stdout
