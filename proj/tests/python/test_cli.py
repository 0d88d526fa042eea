"""CLI contract tests; the binary path arrives in HILBPROJ_CLI."""

import json
import os
import subprocess
import tempfile

import pytest

CLI = os.environ.get("HILBPROJ_CLI", "hilbproj")
FERMAT = "x0^4 + x1^4 + x2^4"


def run_cli(*args, poly=None):
    argv = [CLI, *args]
    tmp = None
    if poly is not None:
        tmp = tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False)
        tmp.write(poly)
        tmp.close()
        argv += ["--poly", tmp.name]
    try:
        proc = subprocess.run(argv, capture_output=True, text=True)
    finally:
        if tmp is not None:
            os.unlink(tmp.name)
    return proc


def test_genus_schema_matches_the_documented_example():
    proc = run_cli("genus", "--d", "4", "--a", "2")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {
        "d": 4,
        "a": 2,
        "cover_degree": 6,
        "genus_formula": 7,
        "genus_hurwitz": 7,
    }


def test_hilb_output():
    proc = run_cli("hilb", "--profile", "2,1,1", "--a", "2")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["degree_check"] == 6
    assert len(data["points"]) == 4
    assert data["points"][0] == {
        "k": [2, 0, 0],
        "tangent_dim": 0,
        "smooth": True,
        "ram_index": 1,
    }


def test_cone_exit_zero_and_fano_flag():
    proc = run_cli("cone", "--n", "3", "--a", "5", "--d", "4")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["fano"] is False

    fano = json.loads(run_cli("cone", "--n", "3", "--a", "2", "--d", "4").stdout)
    assert fano["fano"] is True
    assert fano["minusK_dot_V"] == "3"
    assert [r["locus"] for r in fano["extremal_rays"]] == ["E", "Ehat", "G", "Ghat"]


def test_classify_output():
    data = json.loads(run_cli("classify3folds").stdout)
    assert data["count"] == 8
    assert {"d": 4, "a": 2, "tau_isomorphism": False} in data["cases"]


def test_fiber_and_pencil():
    fiber = run_cli("fiber", "--center", "1,2,5", "--direction", "0,1,3", poly=FERMAT)
    assert fiber.returncode == 0
    assert json.loads(fiber.stdout) == {"profile": [1, 1, 1, 1], "sum": 4}

    pencil = run_cli("pencil", "--center", "1,2,5", poly=FERMAT)
    data = json.loads(pencil.stdout)
    assert data == {
        "disc_degree": 12,
        "degree_attained": True,
        "squarefree": True,
        "branch_count": 12,
    }


def test_genus_from_pencil_data():
    proc = run_cli("genus", "--d", "4", "--a", "2", "--center", "1,2,5", poly=FERMAT)
    data = json.loads(proc.stdout)
    assert data["branch_points"] == 12
    assert data["ram_per_branch"] == 2
    assert data["genus_hurwitz"] == 7


def test_precondition_violation_exits_one_with_error_object():
    # The center lies on the curve x0^2 + x1^2 - x2^2 at (3,4,5).
    proc = run_cli("fiber", "--center", "3,4,5", "--direction", "0,1,1",
                   poly="x0^2 + x1^2 - x2^2")
    assert proc.returncode == 1
    err = json.loads(proc.stdout)["error"]
    assert err["code"] == "center-on-hypersurface"


def test_parse_error_names_offset_and_token():
    proc = run_cli("fiber", "--center", "1,2,5", "--direction", "0,1,1",
                   poly="x0^4 + y^4")
    assert proc.returncode == 1
    err = json.loads(proc.stdout)["error"]
    assert err["code"] == "parse"
    assert err["offset"] == 7
    assert err["token"] == "y"


def test_monodromy_requires_seed_and_is_byte_deterministic():
    missing = run_cli("monodromy", "--center", "1,2,5", "--samples", "20", poly=FERMAT)
    assert missing.returncode != 0

    first = run_cli("monodromy", "--center", "1,2,5", "--samples", "60",
                    "--seed", "11", poly=FERMAT)
    second = run_cli("monodromy", "--center", "1,2,5", "--samples", "60",
                     "--seed", "11", poly=FERMAT)
    assert first.returncode == 0
    assert first.stdout == second.stdout  # byte-identical
    data = json.loads(first.stdout)
    assert data["samples_used"] + data["discarded"] + data["skipped"] == 60


def test_numbers_are_exact():
    # Rationals serialize as strings; no floats anywhere in the output.
    data = json.loads(run_cli("cone", "--n", "3", "--a", "2", "--d", "4").stdout)

    def no_floats(node):
        if isinstance(node, dict):
            return all(no_floats(v) for v in node.values())
        if isinstance(node, list):
            return all(no_floats(v) for v in node)
        return not isinstance(node, float)

    assert no_floats(data)
    minus_k = data["pairing_table"]["rows"][-1]
    assert minus_k["divisor"] == "-K"
    assert minus_k["values"] == ["1", "1", "1", "1", "3"]


def test_table_format():
    proc = run_cli("genus", "--d", "4", "--a", "2", "--format", "table")
    assert proc.returncode == 0
    assert "genus_formula: 7" in proc.stdout


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
