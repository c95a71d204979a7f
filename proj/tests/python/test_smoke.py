from fractions import Fraction

import pytest

import diracsym


def test_gammas_satisfy_clifford_relations():
    np = pytest.importorskip("numpy")
    for d in (2, 4, 6):
        g = [diracsym.to_numpy(m) for m in diracsym.gammas(d)]
        n = g[0].shape[0]
        metric = [1] + [-1] * d
        for mu in range(d + 1):
            for nu in range(d + 1):
                expected = 2 * metric[mu] * np.eye(n) if mu == nu else np.zeros((n, n))
                assert np.array_equal(g[mu] @ g[nu] + g[nu] @ g[mu], expected)
        assert diracsym.clifford_holds(d, "recursive")


def test_d4_single_verdicts():
    sol = diracsym.solve_tau(4, "single", "Tw")
    assert sol["status"] == "exists"
    assert len(sol["basis"]) == 1
    assert diracsym.solve_tau(4, "single", "Tp")["status"] == "absent"


def test_massless_tp_is_gamma0():
    rep = diracsym.solve_tau(4, "massless", "Tp", mass=0)["representative"]
    g0 = diracsym.gammas(4)[0]
    ratio = None
    for row_r, row_g in zip(rep, g0):
        for a, b in zip(row_r, row_g):
            assert (a == (0, 0)) == (b == (0, 0))
            if b != (0, 0):
                z = complex(a) / complex(b)
                ratio = z if ratio is None else ratio
                assert abs(z - ratio) < 1e-12


def test_classify_period_four():
    rows = diracsym.classify([2, 6], ["single"])
    exists = [{v["candidate"]: v["status"] == "exists" for v in r["verdicts"]} for r in rows]
    assert exists[0] == exists[1]
    assert exists[0]["C"] and not exists[0]["Tp"]


def test_dispersion_exact():
    proof = diracsym.dispersion(4, "single", [0, 0, 0, 4], mass=3)
    assert proof["holds"]
    assert proof["omega2"] == Fraction(25)
    assert proof["momentum"] == [0, 0, 0, 4]


def test_labels():
    assert diracsym.labels("single") == ["D^+(1/2,0)", "D^-(0,1/2)"]


def test_cli_exit_codes():
    code, out, _ = diracsym.run_cli(["classify", "--dims", "2,4", "--variants", "single"])
    assert code == 0 and "single" in out
    code, _, err = diracsym.run_cli(["classify", "--dims", "4", "--variants", "single", "--expect", "Tw:no"])
    assert code == 2 and "MISMATCH" in err
    assert diracsym.run_cli(["solve-tau", "--dim", "4"])[0] == 1
