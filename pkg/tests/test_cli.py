import io
import json
import subprocess
import sys

import pytest

from frobdeg.cli import run
from frobdeg.field import parse_field
from frobdeg.poly import parse_poly, parse_poly_list
from frobdeg.solver import solve_for

KEYS = {"g", "lower_bound", "upper_bound", "method", "counterexample", "witness", "types", "count"}


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    assert code == 0
    return json.loads(text)


def test_degree_json():
    out = call_json("degree", "--field", "Q", "t^2-2*t+1, t^2, t^2+2*t+1")
    assert KEYS <= out.keys()
    assert out["g"] == 3
    assert (out["lower_bound"], out["upper_bound"]) == (3, 4)
    assert out["method"] == "rank_criterion"


def test_degree_accepts_factored_input():
    out = call_json("degree", "(t-1)^2, t^2, (t+1)^2")
    assert out["g"] == 3


def test_degree_certify_round_trip():
    out = call_json("degree", "(t-1)^2, t^2, (t+1)^2", "--certify", "--verify", "--seed", "42")
    F = parse_field(out["field"])
    G = parse_poly(out["counterexample"], F)
    assert G.degree == 3 and G.is_monic()
    assert solve_for(G, parse_poly_list("(t-1)^2, t^2, (t+1)^2", F)) is None


def test_solve_witness():
    out = call_json("solve", "--field", "Q", "--target", "t^3", "t, t+1", "--verify")
    F = parse_field("Q")
    xs = [parse_poly(x, F) for x in out["witness"]]
    A = parse_poly_list("t, t+1", F)
    assert sum((x * a for x, a in zip(xs, A)), parse_poly("0", F)) == parse_poly("t^3", F)
    assert out["representable"] is True


def test_solve_not_representable():
    out = call_json("solve", "--target", "t^2-t-1", "t, t+1")
    assert out["witness"] is None and out["representable"] is False


def test_oracle_command():
    out = call_json("oracle", "--field", "F5", "t+1, t+2, t+3", "--dmax", "2")
    assert out["g"] == 1
    assert out["counterexample"] is not None
    assert out["method"] == "oracle_fallback"


def test_extension_field_oracle():
    out = call_json("oracle", "--field", "F5^2", "t+1, t+2, t+3", "--dmax", "2")
    assert out["g"] == 2


def test_bounds_command():
    out = call_json("bounds", "(t-1)^7, t^7, (t+1)^7")
    assert (out["lower_bound"], out["upper_bound"]) == (10, 14)


def test_denumerant_command():
    out = call_json("denumerant", "--target", "t^3", "t, t+1")
    assert out["count"] == 4
    assert sorted(map(tuple, out["types"]), key=str) == sorted(
        [(2, "-inf"), (2, 1), (0, 2), (1, 2)], key=str
    )
    assert (out["C"], out["chi_AB"], out["chi_BA"]) == (2, 1, 1)


def test_charp_command():
    out = call_json("charp", "--field", "F2", "--target", "1", "-m", "3", "t, t+1", "--verify")
    assert out["witness"] == ["t^4 + t^3 + 1", "t^4 + 1"]


def test_counterexample_command():
    out = call_json("counterexample", "t, t+1", "--seed", "3", "--verify")
    assert out["g"] == 2
    G = parse_poly(out["counterexample"], parse_field("Q"))
    assert solve_for(G, parse_poly_list("t, t+1", parse_field("Q"))) is None


def test_neg_inf_json():
    out = call_json("degree", "1, t")
    assert out["g"] == "-inf"
    out = call_json("degree", "--field", "F2", "t, t+1")
    assert out["g"] == "-inf" and out["method"] == "positive_characteristic"


def test_text_output():
    code, text = call("degree", "(t-1)^2, t^2, (t+1)^2")
    assert code == 0
    assert "g = 3" in text
    assert "bounds: 3 <= g <= 4" in text


def test_same_seed_same_output():
    argv = ("degree", "(t-1)^7, t^7, (t+1)^7", "--certify", "--seed", "9", "--json")
    assert call(*argv) == call(*argv)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("FROBDEG_SEED", "9")
    env_run = call("counterexample", "(t-1)^2, t^2, (t+1)^2", "--json")
    explicit = call("counterexample", "(t-1)^2, t^2, (t+1)^2", "--seed", "9", "--json")
    assert env_run == explicit


@pytest.mark.parametrize(
    "argv",
    [
        ("degree", "t^2, t^2+t"),  # not coprime
        ("degree", "t^2 +* t, t"),  # parse error
        ("degree", "1, t", "--strict"),
        ("solve", "--field", "F2", "--target", "t^3", "t, t+1"),  # characteristic too small
        ("degree", "--field", "F6", "t, t+1"),
        ("charp", "--target", "1", "t, t+1"),
    ],
)
def test_invalid_input_exit_code(argv):
    code, _ = call(*argv)
    assert code == 2


def test_capacity_exit_code():
    code, _ = call("oracle", "--field", "F13", "t^3, t^3+1", "--capacity", "1000")
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "frobdeg", "degree", "t^2+1, t^2, t^2-1", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["g"] == 4
