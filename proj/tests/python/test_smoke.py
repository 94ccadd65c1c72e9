import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

import littlewood as lw

CLI = os.environ.get("LITTLEWOOD_CLI")
SCHEMA = Path(os.environ.get(
    "LITTLEWOOD_SCHEMA",
    Path(__file__).resolve().parents[2] / "schema" / "output.v1.schema.json",
))


def test_limits_are_fractions():
    assert lw.limit("fekete", 2) == Fraction(5, 3)
    assert lw.limit("galois", 4) == Fraction(92, 21)
    assert lw.limit("fekete", 8) == Fraction(643983856759, 212837625)
    assert lw.limit_direct("galois", 3) == lw.limit("galois", 3)


def test_triangle_rows():
    assert lw.triangle_row("fekete", 2) == [-2, 10, -2]
    assert lw.triangle_row("galois", 3) == [4, -76, 264, -76, 4]


def test_big_integers_survive():
    t = lw.tangent_numbers(30)
    assert t[:4] == [1, -2, 16, -272]
    assert abs(t[-1]) > 2**64


def test_phi_accepts_several_input_types():
    assert lw.phi(2, Fraction(1, 4)) == Fraction(7, 6)
    assert lw.phi(2, "1/4") == Fraction(7, 6)
    assert lw.phi(2, 0.25) == Fraction(7, 6)
    assert lw.phi(3, "3/4") == Fraction(31, 20)


def test_phi_pieces_and_min():
    pieces = lw.phi_pieces(2)
    assert pieces == [(Fraction(0), Fraction(1, 2), [Fraction(5, 3), -4, 8])]
    m = lw.phi_min(3)
    assert m["argmin"][0] <= Fraction(1, 4) <= m["argmin"][1]
    assert m["min"] == (Fraction(31, 20), Fraction(31, 20))
    assert m["alt_flag"] is False


def test_polynomials_and_norms():
    assert lw.fekete(5) == [0, 1, -1, -1, 1]
    assert lw.norm_2q(lw.fekete(5), 2) == 28
    assert lw.norm_2q(lw.galois(2), 2) == 11
    g = lw.galois(7)
    assert lw.norm_2q_quadrature(g, 2) == pytest.approx(lw.norm_2q(g, 2), rel=1e-12)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError, match="Miller-Rabin"):
        lw.fekete(9)
    with pytest.raises(ValueError):
        lw.limit("both", 2)
    with pytest.raises(ValueError):
        lw.phi(2, "one quarter")


def test_convergence_table_order():
    rows = lw.convergence_table("shifted", 2, [101, 11, 53], shift_ratio="1/4")
    assert [r["n"] for r in rows] == [101, 11, 53]
    assert all(r["limit"] == Fraction(7, 6) for r in rows)


needs_cli = pytest.mark.skipif(not CLI, reason="LITTLEWOOD_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@needs_cli
@pytest.mark.parametrize("args", [
    ["limits", "--family", "fekete", "--qmax", "5"],
    ["triangle", "--family", "galois", "--rows", "3"],
    ["phi", "--q", "3", "--eval", "1/8"],
    ["phi", "--q", "4", "--min"],
    ["phi", "--q", "4", "--pieces"],
    ["empirical", "--family", "shifted", "--q", "2", "--p", "11", "13", "--shift", "3"],
    ["empirical", "--family", "galois", "--q", "3", "--k", "3", "4"],
])
def test_cli_json_matches_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    proc = run_cli(*args)
    assert proc.returncode == 0, proc.stderr
    assert proc.stderr == ""
    jsonschema.validate(json.loads(proc.stdout), schema)


@needs_cli
def test_cli_error_record_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    proc = run_cli("empirical", "--family", "fekete", "--q", "2", "--p", "9")
    assert proc.returncode == 1
    assert proc.stdout == ""
    record = json.loads(proc.stderr)
    jsonschema.validate(record, schema)
    assert "primality" in record["error"]["message"]


@needs_cli
def test_cli_exact_strings_round_trip():
    proc = run_cli("limits", "--family", "galois", "--qmax", "8")
    rows = json.loads(proc.stdout)["results"]
    for row in rows:
        assert Fraction(row["limit"]["exact"]) == lw.limit("galois", row["q"])
