import json

from click.testing import CliRunner

from diagbrauer.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def run_json(*args):
    res = run(*args, "--json")
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert data["schema_version"] == 1
    return data


def test_classify_exceptional_over_q():
    data = run_json("classify", "--a", "1,2,-2", "--field", "Q")
    assert data["transcendental_2_part"] == [2]
    assert data["exceptional_class"] == [1, 2, -2]


def test_classify_rationals_and_odd_part():
    data = run_json("classify", "--a", "1/16,3,-9")
    assert data["odd_part"] == [3]
    assert data["transcendental_2_part"] == []


def test_classify_prove_and_extension_text():
    res = run("classify", "--a", "1,8,-8", "--prove", "--extension")
    assert res.exit_code == 0
    assert "agrees" in res.output
    assert "0 -> Z/4 -> Z/8 -> Z/2 -> 0" in res.output


def test_error_reported_by_name():
    res = run("classify", "--a", "1,0,2", "--json")
    assert res.exit_code == 2
    assert json.loads(res.output)["error"] == "ZeroArgument"


def test_verify_case_trace():
    data = run_json("verify-case", "--a", "1,2,8", "--field", "Qi", "--trace")
    assert data["h0_cokernel_order"] == 2
    assert "trace" in data


def test_extension_too_large_reported():
    res = run("classify", "--a", "3,5,7", "--extension", "--json")
    assert res.exit_code == 2
    assert json.loads(res.output)["error"] == "HypothesisFailed"


def test_count_points():
    data = run_json("count-points", "--a", "1,1,1", "--q", "5,13")
    assert [r["q"] for r in data["rows"]] == [5, 13]
    data = run_json("count-points", "--a", "1,1,1", "--q", "5,9,13", "--compare-minus-four")
    assert data["all_equal"]


def test_lattice_and_picard():
    data = run_json("lattice", "--d", "4")
    for key in ("rank", "gram", "hyperplane", "line_class", "w1", "w2"):
        assert key in data
    assert data["rank"] == 22
    data = run_json("lattice", "--picard")
    assert data["rank"] == 20 and data["discriminant"] == [8, 8]


def test_lines():
    data = run_json("lines")
    assert len(data["lines"]) == 48 and data["discriminant"] == [8, 8]


def test_galois():
    data = run_json("galois", "--a", "1,2,8", "--field", "Qi")
    assert data["order"] == 4 and set(data["levels"]) == {"1", "2", "3", "4"}


def test_gauss_subcommands():
    assert run("gauss", "primary", "--z", "2+3i").output.strip() == "3-2i"
    res = run_json("gauss", "symbol", "--x", "2", "--pi=-1+2i")
    assert res["value"] == "-i"


def test_acceptance_subset_exit_code():
    res = run("acceptance", "--only", "lattice", "--quiet")
    assert res.exit_code == 0
    assert "5/5 criteria passed" in res.output
    data = run_json("acceptance", "--only", "3")
    assert data["passed"] and len(data["results"]) == 1
