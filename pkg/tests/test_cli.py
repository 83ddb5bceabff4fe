"""Command line behavior: output formats, exit codes, document round-trips."""

import csv
import io
import json
import subprocess
import sys

import pytest

from flaghorn.cli import build_parser, main


SIGMA1_FOURTH = "2,4,1,3;2,4,1,3;2,4,1,3;2,4,1,3"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_text(capsys):
    code, out, err = run_cli(
        capsys, "enumerate", "--flag", "1,2/3", "--s", "2"
    )
    assert code == 0
    assert err == ""
    lines = out.strip().splitlines()
    assert lines[-1] == "3 movable tuples on 1,2/3 with s=2"
    assert "1,2,3;3,2,1 -> 1" in lines
    assert "2,1,3;2,3,1 -> 1" in lines


def test_enumerate_json(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--flag", "1,2/3", "--s", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["flag"] == "1,2/3"
    assert doc["n"] == 3
    assert doc["s"] == 2
    assert len(doc["results"]) == 3
    assert {"tuple": [[1, 2, 3], [3, 2, 1]], "coefficient": 1} in doc["results"]


def test_enumerate_csv(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--flag", "2/4", "--s", "2", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4
    assert all(row["coefficient"] == "1" for row in rows)
    assert {"tuple": "1,3,2,4;2,4,1,3", "coefficient": "1"} in rows


def test_enumerate_method_choices(capsys):
    for method in ("via_i", "via_iv", "cross_check"):
        code, out, _ = run_cli(
            capsys,
            "enumerate", "--flag", "1,2/3", "--s", "2", "--method", method,
        )
        assert code == 0
        assert "3 movable tuples" in out


def test_check_movable_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--flag", "1,2/3", "--tuple", "2,1,3;2,3,1"
    )
    assert code == 0
    assert "movable" in out
    assert "condition (iii): True" in out


def test_check_not_movable_exit_one(capsys):
    code, out, _ = run_cli(
        capsys,
        "check", "--flag", "1,2/3", "--tuple", "3,1,2;3,1,2;2,3,1",
        "--method", "via_i",
    )
    assert code == 1
    assert "not movable" in out
    assert "witness: step 1" in out


def test_check_cross_check_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys,
        "check", "--flag", "1,2/3", "--tuple", "2,1,3;2,3,1",
        "--method", "cross_check", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["tuple"] == [[2, 1, 3], [2, 3, 1]]
    assert doc["codims"] == [2, 1]
    assert doc["conditions"] == {"i": True, "iii": True, "iv": True}
    assert doc["coefficient"] == 1
    assert doc["factorization"] is None


def test_check_malformed_tuple_exit_two(capsys):
    code, out, err = run_cli(
        capsys, "check", "--flag", "1,2/3", "--tuple", "2,1;2,3,1"
    )
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_check_degree_mismatch_exit_two(capsys):
    code, _, err = run_cli(
        capsys, "check", "--flag", "1,2/3", "--tuple", "2,1,3;2,1,3"
    )
    assert code == 2
    assert "codimensions sum to" in err


def test_coeff_text(capsys):
    code, out, _ = run_cli(
        capsys, "coeff", "--flag", "2/4", "--tuple", SIGMA1_FOURTH
    )
    assert code == 0
    assert out.strip() == "2"


def test_coeff_counts_non_movable_products(capsys):
    # classically nonzero even though the tuple is not movable
    code, out, _ = run_cli(
        capsys, "coeff", "--flag", "1,2/3", "--tuple", "3,1,2;3,1,2;2,3,1"
    )
    assert code == 0
    assert out.strip() == "1"


def test_coeff_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "coeff", "--flag", "2/4", "--tuple", SIGMA1_FOURTH, "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficient"] == 2
    assert doc["codims"] == [1, 1, 1, 1]
    assert doc["conditions"] is None


def test_factor_text(capsys):
    code, out, _ = run_cli(
        capsys, "factor", "--flag", "1,2/3", "--tuple", "2,3,1;2,1,3"
    )
    assert code == 0
    assert "coefficient 1" in out
    assert "1/3: partitions" in out
    assert "1/2: partitions" in out


def test_factor_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys,
        "factor", "--flag", "2/5",
        "--tuple", "3,5,1,2,4;3,5,1,2,4;3,5,1,2,4;3,5,1,2,4;3,5,1,2,4;3,5,1,2,4",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficient"] == 5
    node, product = doc["factorization"], 1
    while node is not None:
        product *= node["coefficient"]
        node = node["fiber"]
    assert product == doc["coefficient"]


def test_factor_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "factor", "--flag", "1,2,3/4", "--tuple", "4,2,3,1;1,3,2,4",
        "--format", "csv",
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["grassmannian"] for row in rows] == ["1/4", "1/3", "1/2"]
    assert [row["level"] for row in rows] == ["1", "2", "3"]


def test_factor_not_movable_exit_two(capsys):
    code, _, err = run_cli(
        capsys, "factor", "--flag", "1,2/3", "--tuple", "3,1,2;3,1,2;2,3,1"
    )
    assert code == 2
    assert "not Levi-movable" in err


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "thm1", "--max-n", "4"
    )
    assert code == 0
    assert out.splitlines()[0] == "thm1: PASS"


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--suite", "duality", "--max-n", "4", "--format", "json",
    )
    assert code == 0
    [doc] = json.loads(out)
    assert doc["suite"] == "duality"
    assert doc["passed"] is True
    assert doc["failures"] == []


def test_verify_all(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "all", "--max-n", "3"
    )
    assert code == 0
    for name in ("thm1", "thm2", "cor13", "lengths", "lr-oracle", "duality"):
        assert f"{name}: PASS" in out


def test_bad_usage_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--flag", "1,2/3"])  # missing --s
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["unknown-command"])


def test_bad_flag_string_exits_two(capsys):
    code, _, err = run_cli(
        capsys, "enumerate", "--flag", "3,1/4", "--s", "2"
    )
    assert code == 2
    assert err.startswith("error:")


def test_parser_prog_name():
    assert build_parser().prog == "flaghorn"


def test_module_entry_point():
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "flaghorn",
            "coeff",
            "--flag",
            "2/4",
            "--tuple",
            SIGMA1_FOURTH,
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2"
