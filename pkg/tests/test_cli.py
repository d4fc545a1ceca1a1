"""Command-line surface: parsing, envelopes, exit codes, format parity."""

from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from ywalk.cli import CliInputError, main, parse_factors, parse_gaussian
from ywalk.exact import GaussianRational


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# ------------------------------------------------------------------ parsing


def test_parse_gaussian_forms():
    assert parse_gaussian("3/2") == GaussianRational(F(3, 2))
    assert parse_gaussian("-1+2/3i") == GaussianRational(F(-1), F(2, 3))
    assert parse_gaussian("0-1i") == GaussianRational(F(0), F(-1))
    assert parse_gaussian("4-1/2i") == GaussianRational(F(4), F(-1, 2))


@pytest.mark.parametrize("bad", ["", "i", "1+", "1i", "3/2+2", "one", "1//2"])
def test_parse_gaussian_rejects(bad):
    with pytest.raises(CliInputError):
        parse_gaussian(bad)


def test_parse_factors():
    factors = parse_factors("1:3/2, 2:-1+2/3i", rank=2)
    assert [(f.node, f.param) for f in factors] == [
        (1, GaussianRational(F(3, 2))),
        (2, GaussianRational(F(-1), F(2, 3))),
    ]


def test_parse_factors_node_range():
    with pytest.raises(CliInputError):
        parse_factors("3:0", rank=2)
    with pytest.raises(CliInputError):
        parse_factors("1:0,,2:1", rank=2)
    with pytest.raises(CliInputError):
        parse_factors("1", rank=2)


def test_gaussian_str_roundtrips_through_parser():
    for value in (
        GaussianRational(F(3, 2)),
        GaussianRational(F(-1), F(2, 3)),
        GaussianRational(F(0), F(-5)),
    ):
        assert parse_gaussian(str(value)) == value


# ------------------------------------------------------------ command runs


def test_walk_command_rows(capsys):
    code, env = run_json(capsys, "walk", "--weight", "1")
    assert code == 0
    assert env["command"] == "walk"
    assert env["algebra"] == "g2"
    assert env["experimental"] is False
    rows = env["results"]["rows"]
    assert [row["exponent"] for row in rows] == [1, 3, 2, 3, 1]
    assert [row["node"] for row in rows] == [1, 2, 1, 2, 1]
    assert rows[0]["roots"] == ["1/3*a"]
    assert rows[3]["roots"] == ["a + 3/2", "a + 5/2", "a + 7/2"]
    assert all(row["crosscheck"] for row in rows)


def test_tables_command(capsys):
    code, env = run_json(capsys, "tables")
    assert code == 0
    s_sets = {(s["b"], s["c"]): s["values"] for s in env["results"]["s_sets"]}
    assert s_sets[(1, 1)] == ["3", "4", "5", "6"]
    assert s_sets[(1, 2)] == ["1/2", "3/2", "5/2", "7/2", "9/2"]
    assert s_sets[(2, 1)] == ["9/2", "13/2"]
    assert s_sets[(2, 2)] == ["1", "3", "4", "6"]


def test_path_command(capsys):
    code, env = run_json(capsys, "path")
    assert code == 0
    paths = {p["weight"]: p["exponents"] for p in env["results"]["paths"]}
    assert paths[1] == [1, 3, 2, 3, 1, 0]
    assert paths[2] == [0, 1, 1, 2, 1, 1]


def test_cyclicity_exit_codes(capsys):
    code, env = run_json(capsys, "cyclicity", "--factors", "1:0,1:7/2", "--mode", "hw")
    assert code == 0 and env["results"]["verdict"] == "certified"
    code, env = run_json(capsys, "cyclicity", "--factors", "1:0,1:3", "--mode", "hw")
    assert code == 1 and env["results"]["verdict"] == "not certified"
    assert env["results"]["violations"] == [
        {"i": 1, "j": 2, "difference": "3", "s_value": "3"}
    ]
    code, _ = run_json(capsys, "cyclicity", "--factors", "1:3,1:0", "--mode", "hw")
    assert code == 0
    code, _ = run_json(capsys, "cyclicity", "--factors", "1:3,1:0", "--mode", "irr")
    assert code == 1


def test_weyl_module_command(capsys):
    code, env = run_json(
        capsys, "weyl-module", "--pi1", "0,4", "--pi2", "2", "--fund-dims", "14,7"
    )
    assert code == 0
    results = env["results"]
    assert results["weight"] == [2, 1]
    assert [f["param"] for f in results["factors"]] == ["4", "2", "0"]
    assert results["dimension_bound"] == 14**2 * 7
    assert results["reference_fund_dims"] == [14, 7]


def test_dim_command_with_config(capsys, tmp_path):
    config = tmp_path / "dims.json"
    config.write_text(json.dumps({"fund_dims": [15, 7]}))
    code, env = run_json(
        capsys, "dim", "--weights", "2,0", "--config", str(config)
    )
    assert code == 0
    assert env["results"]["bound"] == 225
    code, _ = run_cli(capsys, "dim", "--weights", "2,0")
    assert code == 2  # no dimensions supplied anywhere


def test_verify_command(capsys):
    code, env = run_json(capsys, "verify", "--suite", "tables")
    assert code == 0
    assert env["results"]["ok"] is True
    assert all(check["ok"] for check in env["results"]["checks"])


# ---------------------------------------------------------------- errors


def test_input_errors_exit_two(capsys):
    assert main(["cyclicity", "--factors", "3:0"]) == 2
    assert main(["cyclicity", "--factors", "1:zzz"]) == 2
    assert main(["walk", "--weight", "5"]) == 2
    assert main(["walk", "--weight", "1", "--word", "1,2,1"]) == 2
    assert main(["walk", "--weight", "1", "--order", "3"]) == 2
    assert main(["path", "--algebra", "nosuch"]) == 2
    capsys.readouterr()


def test_argparse_usage_error_exits_two(capsys):
    assert main(["walk"]) == 2  # missing required --weight
    capsys.readouterr()


# ------------------------------------------------- formats and determinism


def test_json_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "tables", "--format", "json")
    _, second = run_cli(capsys, "tables", "--format", "json")
    assert first == second


def test_text_and_json_carry_the_same_data(capsys):
    _, env = run_json(capsys, "walk", "--weight", "2")
    _, text = run_cli(capsys, "walk", "--weight", "2")
    for row in env["results"]["rows"]:
        assert row["polynomial"] in text
        for root in row["roots"]:
            assert root in text
    _, env = run_json(capsys, "tables")
    _, text = run_cli(capsys, "tables")
    for s in env["results"]["s_sets"]:
        assert f"S({s['b']},{s['c']})" in text
        for value in s["values"]:
            assert value in text


def test_experimental_flag(capsys):
    _, env = run_json(capsys, "tables")
    assert env["experimental"] is False
    _, env = run_json(capsys, "tables", "--algebra", "a2")
    assert env["experimental"] is True
    _, env = run_json(capsys, "walk", "--weight", "1", "--word", "2,1,2,1,2,1")
    assert env["experimental"] is True


def test_custom_algebra_file(capsys, tmp_path):
    algebra = tmp_path / "g2.alg"
    algebra.write_text(
        "# flagship data\n"
        "row 2 -1\n"
        "row -3 2\n"
        "diag 3 1\n"
        "word 1 2 1 2 1 2\n"
    )
    code, env = run_json(capsys, "tables", "--algebra", str(algebra))
    assert code == 0
    assert env["algebra"] == "custom:g2.alg"
    assert env["experimental"] is True
    s_sets = {(s["b"], s["c"]): s["values"] for s in env["results"]["s_sets"]}
    assert s_sets[(1, 1)] == ["3", "4", "5", "6"]


def test_custom_algebra_rejects_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("row 2 -1\nrow -1 2\ndiag 3 1\n")  # DA not symmetric
    assert main(["tables", "--algebra", str(bad)]) == 2
    capsys.readouterr()


def test_a1_tables(capsys):
    code, env = run_json(capsys, "tables", "--algebra", "a1")
    assert code == 0
    assert env["experimental"] is False
    assert env["results"]["s_sets"] == [{"b": 1, "c": 1, "values": ["1"]}]


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "ywalk", "path", "--algebra", "a1"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0
    assert "exponents: 1" in result.stdout
