import json
import pytest

from sparsekron.verify import PropertyFailure, SuiteResult
from sparsekron_cli.cli import cli


def _interp(runner, *args, env=None):
    return runner.invoke(cli, ["interp", *args], env=env)


def test_sparse_input(cli_runner):
    result = _interp(cli_runner, "--sparse", "x1 + x2", "-n", "2", "-T", "2", "-D",
                     "2", "--alg", "base")
    assert result.exit_code == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "x1 + x2"
    assert lines[1] == "# algorithm=base backend=bot ring=zz n=2 T=2 D=2"
    assert lines[2].startswith("# probes=28 expected=28 univariate=7")


def test_expression_input(cli_runner):
    result = _interp(cli_runner, "--expr", "(x1 + x2)^2 - x1^2 - x2^2", "-n", "2",
                     "-T", "1", "-D", "3")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.splitlines()[0] == "2*x1*x2"


def test_json_output(cli_runner):
    result = _interp(cli_runner, "--sparse", "3*x1^2*x2 - x3 + 5", "-n", "3", "-T",
                     "3", "-D", "4", "--alg", "modulus", "--format", "json")
    assert result.exit_code == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["polynomial"] == "3*x1^2*x2 - x3 + 5"
    assert report["algorithm"] == "modulus"
    assert report["probes"] == report["expected_probes"]
    assert "wall_time_ms" not in report


def test_json_output_is_reproducible(cli_runner):
    args = ["--sparse", "x1*x2 - 7", "-n", "2", "-T", "2", "-D", "3",
            "--format", "json"]
    assert _interp(cli_runner, *args).stdout == _interp(cli_runner, *args).stdout


def test_csv_output(cli_runner):
    result = _interp(cli_runner, "--sparse", "x1 + x2", "-n", "2", "-T", "2", "-D",
                     "2", "--format", "csv", "--backend", "lagrange")
    assert result.exit_code == 0, result.stderr
    header, row = result.stdout.splitlines()
    assert "polynomial" in header.split(",")
    assert "x1 + x2" in row


def test_timings(cli_runner):
    result = _interp(cli_runner, "--sparse", "x1", "-n", "1", "-T", "1", "-D", "2",
                     "--timings")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.splitlines()[-1].startswith("# wall_time_ms=")


def test_auto_ring(cli_runner):
    result = _interp(cli_runner, "--sparse", "x1 - x2", "-n", "2", "-T", "2", "-D",
                     "2", "--alg", "base", "--ring", "fq:auto")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.splitlines()[0] == "x1 + 18*x2"
    assert "ring=fq:19" in result.stdout


def test_ring_from_environment(cli_runner):
    result = _interp(cli_runner, "--sparse", "x1 + x2", "-n", "2", "-T", "2", "-D",
                     "2", "--alg", "base", env={"SPARSEKRON_RING": "fq:23"})
    assert result.exit_code == 0, result.stderr
    assert "ring=fq:23" in result.stdout


def test_bounds_violation_exits_3(cli_runner):
    result = _interp(cli_runner, "--expr", "(x1 + x2)^2", "-n", "2", "-T", "2",
                     "-D", "2", "--alg", "base")
    assert result.exit_code == 3
    assert result.stderr.startswith("error[bounds]: ")
    assert result.stdout == ""


@pytest.mark.parametrize("text, T, D, reason", [
    ("x1^2*x2 + x2", 2, 3, "total degree 3"),
    ("x1 + x2 + 1", 2, 2, "3 terms"),
])
def test_sparse_input_breaking_the_bounds_is_rejected_upfront(cli_runner, mocker,
                                                              text, T, D, reason):
    interpolate = mocker.patch(
        "sparsekron.interpolation.BaseChangingInterpolator.interpolate")
    result = _interp(cli_runner, "--sparse", text, "-n", "2", "-T", str(T), "-D",
                     str(D), "--alg", "base")
    assert result.exit_code == 3
    assert result.stderr.startswith("error[bounds]: ")
    assert reason in result.stderr
    interpolate.assert_not_called()


def test_ring_too_small_exits_4(cli_runner):
    result = _interp(cli_runner, "--sparse", "x1 + x2", "-n", "2", "-T", "2", "-D",
                     "2", "--alg", "base", "--ring", "fq:5")
    assert result.exit_code == 4
    assert result.stderr.startswith("error[ring]: ")


@pytest.mark.parametrize("args, code_name", [
    (["--expr", "x1 +", "-n", "1", "-T", "1", "-D", "2"], "parse"),
    (["--expr", "x1^2^3", "-n", "1", "-T", "1", "-D", "9"], "parse"),
    (["--sparse", "x1 + x3", "-n", "2", "-T", "2", "-D", "2"], "parse"),
    (["--sparse", "x1", "-n", "1", "-T", "1"], "config"),
    (["--sparse", "x1", "--expr", "x1", "-n", "1", "-T", "1", "-D", "2"], "config"),
    (["-n", "1", "-T", "1", "-D", "2"], "config"),
    (["--sparse", "x1", "-n", "1", "-T", "1", "-D", "2", "--ring", "fq:15"],
     "config"),
    (["--sparse", "x1", "-n", "1", "-T", "1", "-D", "2", "--ring", "qq"], "config"),
    (["--sparse", "x1", "-n", "1", "-T", "0", "-D", "2"], "config"),
])
def test_usage_errors_exit_2(cli_runner, args, code_name):
    result = _interp(cli_runner, *args)
    assert result.exit_code == 2
    assert result.stderr.startswith(f"error[{code_name}]: ")


def test_poly_file(cli_runner, tmp_path):
    path = tmp_path / "f.poly"
    path.write_text("ring: fq 1009\nn: 2\n"
                    "expr: (x1 + x2)^2 - x1^2 - x2^2\nT: 1\nD: 3\n")
    result = _interp(cli_runner, "--file", str(path), "--alg", "modulus")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.splitlines()[0] == "2*x1*x2"
    assert "ring=fq:1009" in result.stdout


def test_poly_file_flags_override_bounds(cli_runner, tmp_path):
    path = tmp_path / "f.poly"
    path.write_text("n: 2\nsparse: x1 + x2\nT: 1\nD: 2\n")
    result = _interp(cli_runner, "--file", str(path), "-T", "2")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.splitlines()[0] == "x1 + x2"


def test_invalid_poly_file(cli_runner, tmp_path):
    path = tmp_path / "f.poly"
    path.write_text("n: 2\nT: 1\nD: 2\n")
    result = _interp(cli_runner, "--file", str(path))
    assert result.exit_code == 2
    assert result.stderr.startswith("error[parse]: ")


def test_config_file(cli_runner, tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("interpolator:\n  type: base\n  backend:\n    type: lagrange\n")
    args = ["--sparse", "x1 + x2", "-n", "2", "-T", "2", "-D", "2", "--config",
            str(path)]
    result = _interp(cli_runner, *args)
    assert result.exit_code == 0, result.stderr
    assert "algorithm=base backend=lagrange" in result.stdout

    result = _interp(cli_runner, *args, "--backend", "bot")
    assert "algorithm=base backend=bot" in result.stdout


def test_bad_config_file(cli_runner, tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("interpolator:\n  type: fastest\n")
    result = _interp(cli_runner, "--sparse", "x1", "-n", "1", "-T", "1", "-D", "2",
                     "--config", str(path))
    assert result.exit_code == 2
    assert result.stderr.startswith("error[config]: ")


def test_verify_zero_count(cli_runner):
    result = cli_runner.invoke(cli, ["verify", "--count", "0"])
    assert result.exit_code == 0
    assert "warning: --count 0 checks nothing" in result.stderr
    assert result.stdout.strip() == \
        "PASS: scope=all seed=0 count=0 checks=0 failures=0"


def test_verify_lemmas(cli_runner):
    result = cli_runner.invoke(cli, ["verify", "--scope", "lemmas", "--seed", "3",
                                     "--count", "4"])
    assert result.exit_code == 0, result.stderr
    assert result.stdout.startswith("PASS: scope=lemmas seed=3 count=4")


def test_verify_failure_exits_1(cli_runner, mocker):
    failing = SuiteResult(scope="roundtrip", seed=0, count=1, checks=1, failures=[
        PropertyFailure(suite="roundtrip", check="base/bot", instance="n=1 T=1 D=2",
                        detail="recovered 0", minimized="x1"),
    ])
    mocker.patch("sparsekron_cli.cli.run_suites", return_value=failing)
    result = cli_runner.invoke(cli, ["verify", "--scope", "roundtrip", "--count", "1"])
    assert result.exit_code == 1
    assert result.stdout.startswith("FAIL: scope=roundtrip")
    assert "minimized: x1" in result.stderr
    assert "error[property]: 1 of 1 property checks failed" in result.stderr


def test_bench(cli_runner):
    result = cli_runner.invoke(cli, ["bench", "--seed", "1", "-n", "2", "-T", "1,2",
                                     "-D", "3"])
    assert result.exit_code == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "# seed=1"
    assert lines[1] == "# n=2 D=3 backend=bot"
    header = lines[2].split(",")
    assert header[:4] == ["n", "T", "D", "ring"]
    rows = [dict(zip(header, line.split(","))) for line in lines[3:]]
    assert [(r["T"], r["algorithm"]) for r in rows] == [
        ("1", "base"), ("1", "modulus"), ("2", "base"), ("2", "modulus")]
    assert all(r["agree"] == "True" for r in rows)
    assert all(r["probes"] == r["expected_probes"] for r in rows)


def test_bench_is_reproducible(cli_runner):
    args = ["bench", "--seed", "9", "-T", "2", "-D", "3", "--alg", "base"]
    assert cli_runner.invoke(cli, args).stdout == cli_runner.invoke(cli, args).stdout


def test_bench_to_file(cli_runner, tmp_path):
    out = tmp_path / "bench.csv"
    result = cli_runner.invoke(cli, ["bench", "-T", "1", "-D", "2", "-o", str(out)])
    assert result.exit_code == 0, result.stderr
    assert out.read_text().startswith("# seed=0\n")
    assert "rows written" in result.stderr


def test_bench_bad_term_list(cli_runner):
    result = cli_runner.invoke(cli, ["bench", "-T", "1,x"])
    assert result.exit_code == 2
    assert result.stderr.startswith("error[config]: ")


def test_create_config(cli_runner, tmp_path):
    out = tmp_path / "configs"
    result = cli_runner.invoke(cli, ["create-config", str(out)])
    assert result.exit_code == 0
    assert (out / "default.yaml").exists()
    assert (out / "prime_field.yaml").exists()


def test_no_command_prints_help(cli_runner):
    result = cli_runner.invoke(cli, [])
    assert result.exit_code == 0
    assert "interp" in result.stdout
    assert result.stdout.index("interp") < result.stdout.index("create-config")
