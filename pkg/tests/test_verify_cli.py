import json

import pytest

from polyflip import SUITES, run_suite
from polyflip.cli import main

EXPECTED_SUITES = ["poset", "bijection", "divisibility", "qsym", "intervals", "series"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_suite_registry():
    assert list(SUITES) == EXPECTED_SUITES


@pytest.mark.parametrize("name", EXPECTED_SUITES)
def test_each_suite_passes_on_small_case(name):
    (report,) = run_suite(name, 2, 2)
    assert report.passed, (report.counterexample, report.detail)
    assert report.suite == name
    assert report.m == 2 and report.n == 2
    assert report.seconds >= 0
    data = report.to_json()
    assert data["suite"] == name and data["pass"] is True
    assert set(data) == {"suite", "m", "n", "pass", "counterexample", "detail"}


def test_run_all_suites():
    reports = run_suite("all", 1, 3)
    assert [r.suite for r in reports] == EXPECTED_SUITES
    assert all(r.passed for r in reports)


def test_run_suite_unknown_name():
    with pytest.raises(KeyError):
        run_suite("nope", 2, 2)


def test_cli_enumerate_csv(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--m", "2", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "rank,diagonals,vector,poly,leading",
        '0,"(0,3)",0 0 0 0,1,1',
        '1,"(1,4)",0 0 1 0,(x2-y1),x2',
        '1,"(2,5)",0 0 0 1,(y2-x1),y2',
    ]


def test_cli_enumerate_json_and_final_filter(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--m", "2", "--n", "2")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3
    assert data["items"][0] == {
        "diagonals": [[0, 3]],
        "rank": 0,
        "vector": [0, 0, 0, 0],
        "poly": "1",
        "leading": "1",
    }
    code, out, _ = run_cli(capsys, "enumerate", "--m", "2", "--n", "2", "--final")
    assert json.loads(out)["count"] == 2


def test_cli_output_is_byte_stable(capsys):
    _, first, _ = run_cli(capsys, "enumerate", "--m", "2", "--n", "3")
    _, second, _ = run_cli(capsys, "enumerate", "--m", "2", "--n", "3")
    assert first == second


def test_cli_poset_dot_and_json(capsys):
    code, out, _ = run_cli(capsys, "poset", "--m", "2", "--n", "2")
    assert code == 0
    assert out.startswith("digraph flip_poset {")
    assert out.endswith("}\n")
    assert out.count(" -> ") == 2
    code, out, _ = run_cli(capsys, "poset", "--m", "2", "--n", "2", "--emit", "json")
    data = json.loads(out)
    assert len(data["elements"]) == 3 and len(data["covers"]) == 2


def test_cli_series(capsys):
    code, out, _ = run_cli(capsys, "series", "--m", "2", "--which", "T", "--order", "5")
    assert code == 0
    assert json.loads(out)["coefficients"] == [1, 3, 12, 55, 273]
    code, out, _ = run_cli(capsys, "series", "--m", "2", "--which", "G", "--order", "3")
    assert json.loads(out)["coefficients"] == [[1], [1, 2], [1, 4, 7]]
    code, out, _ = run_cli(
        capsys, "series", "--m", "1", "--which", "I", "--order", "3", "--format", "csv"
    )
    assert out.splitlines() == ["n,coefficient", "1,1", "2,3", "3,11"]


def test_cli_verify_pass(capsys):
    code, out, err = run_cli(capsys, "verify", "--m", "2", "--n", "2", "--suite", "poset")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1 and reports[0]["pass"] is True
    assert "poset: pass in" in err


def test_cli_verify_all(capsys):
    code, out, err = run_cli(capsys, "verify", "--m", "1", "--n", "2")
    assert code == 0
    assert [r["suite"] for r in json.loads(out)] == EXPECTED_SUITES
    assert err.count(": pass in") == len(EXPECTED_SUITES)


def test_cli_size_guard_exit_code(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--m", "2", "--n", "9")
    assert code == 2
    assert "size guard" in err and "POLYFLIP_MAX_MN" in err


def test_cli_env_override_tightens_guard(capsys, monkeypatch):
    monkeypatch.setenv("POLYFLIP_MAX_MN", "4")
    code, _, err = run_cli(capsys, "enumerate", "--m", "1", "--n", "5")
    assert code == 2 and "size guard" in err
    monkeypatch.setenv("POLYFLIP_MAX_MN", "5")
    code, out, _ = run_cli(capsys, "enumerate", "--m", "1", "--n", "5")
    assert code == 0 and json.loads(out)["count"] == 42


def test_cli_rejects_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["enumerate", "--m", "0", "--n", "2"])
    with pytest.raises(SystemExit):
        main(["enumerate", "--m", "2"])
    with pytest.raises(SystemExit):
        main(["series", "--m", "2", "--which", "Q"])
    with pytest.raises(SystemExit):
        main([])
