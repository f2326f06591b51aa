"""Command-line driver: output contracts, config precedence, exit codes."""

import json
import math
import os
import shutil
import subprocess

import pytest

from spherica import bessel_i0, bessel_j0, hyper_f
from spherica.cli import main

MIX_TWO_GAUSSIANS = {
    "components": [
        {"weight": 0.5, "omega": {"alpha": [], "gamma": 1.0}},
        {"weight": 0.5, "omega": {"alpha": [], "gamma": 4.0}},
    ]
}


def run_cli(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = int(exc.code or 0)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def test_eval_spherical_json_output(capsys):
    code, out, err = run_cli(capsys, ["eval-spherical", "--x", "1", "--xi", "1"])
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert set(payload) == {"value", "abs_error", "terms_used", "path"}
    assert payload["value"] == pytest.approx(bessel_j0(1.0), rel=1e-10)


def test_eval_spherical_csv_output(capsys):
    code, out, _ = run_cli(
        capsys, ["eval-spherical", "--x", "1,2", "--xi", "0.5,1.5", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "value,abs_error,terms_used,path"
    assert len(lines) == 2


def test_eval_spherical_degenerate_determinant_exits_two(capsys):
    code, out, err = run_cli(
        capsys, ["eval-spherical", "--x", "1,1", "--xi", "1,1", "--path", "det"]
    )
    assert code == 2 and out == ""
    assert "\n" not in err.strip()
    msg = json.loads(err)
    assert msg["error"] == "degeneracy"


def test_eval_spherical_zero_argument(capsys):
    code, out, _ = run_cli(capsys, ["eval-spherical", "--x", "0,0", "--xi", "3,4"])
    assert code == 0
    assert json.loads(out)["value"] == 1.0


def test_eval_polya_values(capsys, tmp_path):
    om = write_json(tmp_path, "om.json", {"alpha": [4], "gamma": 0})
    code, out, _ = run_cli(capsys, ["eval-polya", "--omega", om, "--lam", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["pi_values"] == [0.5]
    assert payload["phi_product"] == 0.5

    code, out, _ = run_cli(capsys, ["eval-polya", "--omega", om, "--lam", "1,1"])
    assert json.loads(out)["phi_product"] == 0.25


def test_eval_polya_rejects_bad_schema(capsys, tmp_path):
    om = write_json(tmp_path, "bad.json", {"alpha": [1], "gamma": -1})
    code, out, err = run_cli(capsys, ["eval-polya", "--omega", om, "--lam", "1"])
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "schema"


def test_eval_mixture_value(capsys, tmp_path):
    mix = write_json(tmp_path, "mix.json", MIX_TWO_GAUSSIANS)
    code, out, _ = run_cli(capsys, ["eval-mixture", "--mixture", mix, "--lam", "1"])
    assert code == 0
    payload = json.loads(out)
    expected = (math.exp(-0.25) + math.exp(-1.0)) / 2.0
    assert payload["value"] == pytest.approx(expected, rel=1e-12)
    assert len(payload["components"]) == 2


def test_orbital_value_and_guard(capsys):
    code, out, _ = run_cli(capsys, ["orbital", "--lam", "1", "--theta", "2"])
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(hyper_f(1.0), rel=1e-10)

    code, _, err = run_cli(capsys, ["orbital", "--lam", "30", "--theta", "30"])
    assert code == 2
    assert json.loads(err)["error"] == "range"


def test_heat_kernel_value(capsys):
    code, out, _ = run_cli(
        capsys, ["heat-kernel", "--t", "0.5", "--lam", "1", "--theta", "1"]
    )
    assert code == 0
    expected = math.exp(-1.0) * bessel_i0(1.0)
    assert json.loads(out)["value"] == pytest.approx(expected, rel=1e-12)


def test_laplacian_check_passes(capsys):
    code, out, err = run_cli(
        capsys, ["laplacian-check", "--x", "1,2", "--xi", "0.5,1.5"]
    )
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["rel_error"] <= payload["tol"]


def test_sweep_spherical_error_column(capsys, tmp_path):
    om = write_json(tmp_path, "om1.json", {"alpha": [1], "gamma": 0})
    code, out, _ = run_cli(
        capsys,
        [
            "sweep",
            "--kind",
            "spherical",
            "--omega",
            om,
            "--xi",
            "1",
            "--n-list",
            "25,50,100,200",
            "--format",
            "csv",
        ],
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,value,limit,abs_error,std_error"
    errs = [float(line.split(",")[3]) for line in lines[1:]]
    assert len(errs) == 4
    assert all(b < a for a, b in zip(errs, errs[1:]))
    assert errs[-1] <= 0.02


def test_sweep_powersum_error_column(capsys, tmp_path):
    om = write_json(tmp_path, "omg.json", {"alpha": [], "gamma": 1})
    code, out, _ = run_cli(
        capsys,
        [
            "sweep",
            "--kind",
            "powersum",
            "--omega",
            om,
            "--m",
            "2",
            "--n-list",
            "25,50,100",
            "--format",
            "csv",
        ],
    )
    assert code == 0
    for line in out.strip().split("\n")[1:]:
        cols = line.split(",")
        assert float(cols[3]) == pytest.approx(1.0 / int(cols[0]), rel=1e-12)


def test_sweep_weyl_concentrates(capsys):
    code, out, _ = run_cli(
        capsys,
        ["sweep", "--kind", "weyl", "--m", "1", "--n-list", "10,50"],
    )
    assert code == 0
    values = json.loads(out)["values"]
    assert values[1] < values[0]


def test_validate_table_output(capsys):
    code, out, err = run_cli(capsys, ["validate", "--suite", "special"])
    assert code == 0 and err == ""
    lines = out.strip().split("\n")
    assert all(line.startswith("ok") for line in lines[:-1])
    assert "checks passed" in lines[-1]


def test_validate_json_output(capsys):
    code, out, _ = run_cli(
        capsys, ["validate", "--suite", "symfunc", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] == payload["total"] > 0


def test_validate_is_reproducible_in_process(capsys):
    _, first, _ = run_cli(capsys, ["validate", "--suite", "symfunc"])
    _, second, _ = run_cli(capsys, ["validate", "--suite", "symfunc"])
    assert first == second


def test_sampling_sweep_is_reproducible(capsys, tmp_path):
    om = write_json(tmp_path, "om1.json", {"alpha": [1], "gamma": 0})
    argv = [
        "sweep",
        "--kind",
        "spherical",
        "--omega",
        om,
        "--xi",
        "1",
        "--n-list",
        "25",
        "--method",
        "mc",
        "--samples",
        "20000",
        "--seed",
        "0",
    ]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second


def test_config_file_with_flag_precedence(capsys, tmp_path):
    cfg = write_json(
        tmp_path, "cfg.json", {"x": "9,9", "xi": "0.5,1.5", "format": "csv"}
    )
    code, out, _ = run_cli(
        capsys, ["eval-spherical", "--config", cfg, "--x", "1,2"]
    )
    assert code == 0
    _, direct, _ = run_cli(
        capsys, ["eval-spherical", "--x", "1,2", "--xi", "0.5,1.5", "--format", "csv"]
    )
    assert out == direct


def test_config_file_rejects_unknown_keys(capsys, tmp_path):
    cfg = write_json(tmp_path, "cfg.json", {"bogus": 1})
    code, _, err = run_cli(capsys, ["eval-spherical", "--config", cfg, "--x", "1", "--xi", "1"])
    assert code == 1
    assert json.loads(err)["error"] == "usage"


def test_output_file_written(capsys, tmp_path):
    target = tmp_path / "result.json"
    code, out, _ = run_cli(
        capsys, ["eval-spherical", "--x", "1", "--xi", "1", "--out", str(target)]
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["value"] == pytest.approx(
        bessel_j0(1.0), rel=1e-10
    )


def test_missing_required_flag_is_usage_error(capsys):
    code, _, err = run_cli(capsys, ["eval-polya", "--lam", "1"])
    assert code == 1
    assert json.loads(err)["error"] == "usage"


def test_malformed_number_list_is_usage_error(capsys):
    code, _, err = run_cli(capsys, ["eval-spherical", "--x", "1,zap", "--xi", "1,2"])
    assert code == 1
    assert json.loads(err)["error"] == "usage"


def test_unknown_flag_is_usage_error(capsys):
    code, _, err = run_cli(capsys, ["eval-spherical", "--x", "1", "--bogus", "2"])
    assert code == 1
    assert json.loads(err)["error"] == "usage"


@pytest.mark.skipif(shutil.which("spherica") is None, reason="console script not on PATH")
def test_console_script_thread_count_invariance():
    argv = ["spherica", "validate", "--suite", "mc", "--samples", "2000", "--seed", "0"]
    outputs = []
    for threads in ("1", "4"):
        env = dict(os.environ)
        env["OMP_NUM_THREADS"] = threads
        env["OPENBLAS_NUM_THREADS"] = threads
        env["MKL_NUM_THREADS"] = threads
        proc = subprocess.run(argv, capture_output=True, env=env, timeout=300)
        assert proc.returncode == 0, proc.stderr.decode()
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
