# test_cli.py - tests of the command line, driven through `dispatch`.


import json
import numpy as np

from ..main import EXIT_INPUT, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION
from ..utils.xmatrix import ket2dm
from .utils import run_cli, run_cli_json, write_json, write_matrix


def test_chsh_canonical_singlet(capsys):
    res = run_cli_json(["chsh", "--state", "singlet", "--dirs", "canonical"],
                       capsys)
    assert abs(res["value"] - 2 * np.sqrt(2)) < 1e-9
    assert res["classical_bound"] == 2
    assert res["violation"] is True


def test_assert_turns_violation_into_exit_code(capsys):
    code, out, _ = run_cli(["chsh", "--assert"], capsys)
    assert code == EXIT_VIOLATION
    assert json.loads(out)["value"] > 2
    code, _, _ = run_cli(["chsh", "--state", "mixed", "--assert"], capsys)
    assert code == EXIT_OK


def test_entropy_bell_in_bits(capsys):
    res = run_cli_json(["entropy", "--state", "bell", "--unit", "bits"],
                       capsys)
    assert abs(res["S_AB"]) < 1e-12
    assert abs(res["S_A"] - 1) < 1e-12
    assert abs(res["S_cond_A_given_B"] + 1) < 1e-12
    assert res["unit"] == "bits"
    assert res["all_satisfied"]
    assert res["config"]["entropy_unit"] == "bits"


def test_entropy_fuzz_under_assert(capsys):
    code, out, _ = run_cli(["entropy", "--fuzz", "20", "--dims", "2,2,2",
                            "--assert"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["n_violations"] == 0


def test_state_file(tmp_path, capsys):
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    fn = write_matrix(psi, tmp_path, "psi.json")
    res = run_cli_json(["entropy", "--state", fn, "--dims", "2,2"], capsys)
    assert abs(res["S_A"] - np.log(2)) < 1e-12
    fn = write_matrix(ket2dm(psi), tmp_path, "rho.json")
    res = run_cli_json(["chsh", "--state", fn], capsys)
    assert abs(res["value"] - 2 * np.sqrt(2)) < 1e-9


def test_input_errors(tmp_path, capsys):
    code, _, err = run_cli(["entropy", "--state",
                            str(tmp_path / "missing.json"), "--dims", "2,2"],
                           capsys)
    assert code == EXIT_INPUT
    assert "missing.json" in err
    fn = tmp_path / "bad.json"
    fn.write_text("{not json")
    code, _, _ = run_cli(["chsh", "--state", str(fn)], capsys)
    assert code == EXIT_INPUT
    fn = write_json({"rows": 2, "cols": 2, "data": [1, 0, 0]}, tmp_path,
                    "short.json")
    code, _, _ = run_cli(["chsh", "--state", fn], capsys)
    assert code == EXIT_INPUT


def test_usage_errors(capsys):
    code, _, _ = run_cli(["chsh", "--tol", "no_such_tol=1e-3"], capsys)
    assert code == EXIT_USAGE
    code, _, _ = run_cli(["nosuchcommand"], capsys)
    assert code == EXIT_USAGE
    code, _, _ = run_cli(["chsh", "--output", "xml"], capsys)
    assert code == EXIT_USAGE
    code, _, _ = run_cli(["ks-verify", "cabello18", "--drop-context", "9"],
                         capsys)
    assert code == EXIT_USAGE
    code, _, _ = run_cli(["lattice", "witness", "--dim", "1"], capsys)
    assert code == EXIT_USAGE


def test_version(capsys):
    code, out, _ = run_cli(["--version"], capsys)
    assert code == EXIT_OK
    assert out.startswith("qformal ")


def test_output_is_deterministic(capsys):
    argv = ["decohere", "--dims", "4,8", "--trials", "20", "--seed", "3"]
    _, out1, _ = run_cli(argv, capsys)
    _, out2, _ = run_cli(argv, capsys)
    assert out1 == out2
    _, out3, _ = run_cli(["chsh", "--optimize", "--restarts", "4"], capsys)
    _, out4, _ = run_cli(["chsh", "--optimize", "--restarts", "4"], capsys)
    assert out3 == out4


def test_config_echo(capsys):
    res = run_cli_json(["chsh", "--seed", "11", "--tol", "rank_tol=1e-8"],
                       capsys)
    assert res["config"]["seed"] == 11
    assert res["config"]["tolerances"]["rank_tol"] == 1e-8


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("QFORMAL_SEED", "7")
    res = run_cli_json(["chsh"], capsys)
    assert res["config"]["seed"] == 7
    res = run_cli_json(["chsh", "--seed", "2"], capsys)
    assert res["config"]["seed"] == 2


def test_ks_verify(capsys):
    res = run_cli_json(["ks-verify", "cabello18"], capsys)
    assert res["verdict"] == "UNSATISFIABLE"
    assert res["n_rays"] == 18
    res = run_cli_json(["ks-verify", "cabello18", "--drop-context", "0"],
                       capsys)
    assert res["verdict"] == "SATISFIABLE"
    assert res["dropped_context"] == 0


def test_lattice(capsys):
    res = run_cli_json(["lattice", "audit", "mo2"], capsys)
    assert res["is_orthomodular"]
    assert not res["is_distributive"]
    res = run_cli_json(["lattice", "witness", "--dim", "2"], capsys)
    assert res["lhs_rank"] == 1 and res["rhs_rank"] == 0


def test_gns(capsys):
    res = run_cli_json(["gns", "--algebra", "2", "--state", "tracial"],
                       capsys)
    assert res["hilbert_dim"] == 4
    assert res["commutant_dim"] == 4
    assert not res["pure"]
    res = run_cli_json(["gns", "--algebra", "2,1", "--state", "random-pure"],
                       capsys)
    assert res["irreducible"] and res["pure"]


def test_box(capsys):
    res = run_cli_json(["box", "--pr"], capsys)
    assert abs(res["chsh"] - 4) < 1e-12
    assert res["nonsignaling"] and not res["local"]
    code, _, _ = run_cli(["box", "--pr", "--assert"], capsys)
    assert code == EXIT_VIOLATION


def test_gleason_fit_random(capsys):
    res = run_cli_json(["gleason-fit", "--random", "30", "--dim", "3"],
                       capsys)
    assert res["verdict"] == "quantum-consistent"
    assert res["recovery_error"] < 1e-8


def test_protocols_random(capsys):
    res = run_cli_json(["protocols", "--random-dim", "4", "--trials", "2000"],
                       capsys)
    assert res["analytic_equal"]


def test_csv_output(capsys):
    code, out, _ = run_cli(["decohere", "--dims", "4,8", "--trials", "20",
                            "--output", "csv"], capsys)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "N,trials,mean_sq_overlap,sem,inv_N,ratio"
    assert len(lines) == 3


def test_pretty_output_and_path(tmp_path, capsys):
    code, out, _ = run_cli(["chsh", "--output", "pretty"], capsys)
    assert code == EXIT_OK
    assert "value = 2.82842712" in out
    fn = str(tmp_path / "res.json")
    code, out, _ = run_cli(["chsh", "--output-path", fn], capsys)
    assert code == EXIT_OK and out == ""
    with open(fn) as fp:
        assert abs(json.load(fp)["value"] - 2 * np.sqrt(2)) < 1e-9


def test_entropy_clamp_override(tmp_path, capsys):
    rho = np.diag([1 - 1e-6, 1e-6, 0, 0])
    fn = write_matrix(rho, tmp_path, "rho.json")
    argv = ["entropy", "--state", fn, "--dims", "2,2"]
    res = run_cli_json(argv, capsys)
    s_small = -(1 - 1e-6) * np.log(1 - 1e-6) - 1e-6 * np.log(1e-6)
    assert abs(res["S_AB"] - s_small) < 1e-12
    res = run_cli_json(argv + ["--tol", "entropy_clamp=1e-3"], capsys)
    assert abs(res["S_AB"] + (1 - 1e-6) * np.log(1 - 1e-6)) < 1e-12
    assert res["config"]["tolerances"]["entropy_clamp"] == 1e-3


def test_psd_tol_override(tmp_path, capsys):
    rho = np.diag([0.5 + 2e-7, 0.5, -2e-7, 0])
    fn = write_matrix(rho, tmp_path, "rho.json")
    argv = ["entropy", "--state", fn, "--dims", "2,2"]
    code, _, _ = run_cli(argv, capsys)
    assert code == EXIT_INPUT
    res = run_cli_json(argv + ["--tol", "psd_tol=1e-6"], capsys)
    assert res["all_satisfied"]
    code, _, _ = run_cli(["chsh", "--state", fn], capsys)
    assert code == EXIT_INPUT
    res = run_cli_json(["chsh", "--state", fn, "--tol", "psd_tol=1e-6"],
                       capsys)
    assert abs(res["value"]) <= 2


def test_hermiticity_tol_override(tmp_path, capsys):
    H = np.array([[1, 1e-8], [0, -1]])
    fn = write_matrix(H, tmp_path, "H.json")
    argv = ["entropy", "--hamiltonian", fn, "--beta", "0"]
    code, _, _ = run_cli(argv, capsys)
    assert code == EXIT_INPUT
    res = run_cli_json(argv + ["--tol", "hermiticity_tol=1e-6"], capsys)
    assert abs(res["entropy"] - np.log(2)) < 1e-12


def test_eig_tol_override(capsys):
    argv = ["decohere", "--dims", "4", "--trials", "4"]
    run_cli_json(argv, capsys)
    code, _, _ = run_cli(argv + ["--tol", "eig_tol=1e-40"], capsys)
    assert code == EXIT_INPUT


def test_cluster_tol_override(tmp_path, capsys):
    fn = write_matrix(np.diag([0.0, 1e-6]), tmp_path, "x.json")
    argv = ["gns", "--algebra", "2", "--state", "tracial", "--observable", fn]
    res = run_cli_json(argv, capsys)
    probs = [o["probability"] for o in res["observable"]["outcomes"]]
    assert np.allclose(probs, [0.5, 0.5])
    res = run_cli_json(argv + ["--tol", "cluster_tol=1e-3"], capsys)
    outcomes = res["observable"]["outcomes"]
    assert len(outcomes) == 1
    assert abs(outcomes[0]["probability"] - 1) < 1e-12
    assert abs(res["observable"]["expectation"] - 5e-7) < 1e-15
