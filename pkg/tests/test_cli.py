import json
import os
import subprocess
import sys

import pytest
from click.testing import CliRunner

from matroid_toric.catalog import named, uniform
from matroid_toric.cli import main
from matroid_toric.io import parse_matroid

from cli_cases import all_commands, write_inputs


@pytest.fixture(scope="module")
def paths(tmp_path_factory):
    return write_inputs(tmp_path_factory.mktemp("cli"))


def run(args):
    return CliRunner().invoke(main, args, catch_exceptions=False)


def _ids():
    return [" ".join(a for a in argv if not a.endswith(".json"))[:60] for argv, _ in all_commands({k: f"{k}.json" for k in [
        "u12", "u23", "u24", "mk4", "bad", "broken", "coloop", "weight", "c4", "g1", "g2", "g3"]})]


@pytest.mark.parametrize("i", range(len(_ids())), ids=_ids())
def test_every_command_is_deterministic(paths, i):
    argv, code = all_commands(paths)[i]
    first, second = run(argv), run(argv)
    assert first.exit_code == code, first.output
    assert first.output == second.output
    json.loads(first.output)


def test_validate(paths):
    r = run(["matroid", "validate", paths["u24"]])
    assert json.loads(r.output) == {"valid": True, "d": 4, "rank": 2, "n_bases": 6}
    r = run(["matroid", "validate", paths["bad"]])
    out = json.loads(r.output)
    assert r.exit_code == 1 and out["error"] == "ExchangeFails" and out["witness"] == [[1, 2], [3, 4], 1]


def test_parse_errors_exit_2(paths):
    r = run(["matroid", "info", paths["broken"]])
    assert r.exit_code == 2 and "line 1" in r.stderr
    r = run(["matroid", "info", paths["bad"]])
    assert r.exit_code == 2
    r = run(["matroid", "info", "/nonexistent.json"])
    assert r.exit_code == 2


def test_usage_errors_exit_2(paths):
    assert run(["ideal", "gens", "--order", "revlex", paths["u24"]]).exit_code == 2
    assert run(["construct", "series-ext", paths["u24"], "--at", "1", "--at", "2"]).exit_code == 2
    assert run(["construct", "sp-sequence", paths["u24"], "--step", "twist:1"]).exit_code == 2
    assert run(["matroid", "connectivity", paths["u24"], "--subset", "1,9"]).exit_code == 2
    assert run(["--threads", "0", "catalog", "W3"]).exit_code == 2
    assert run(["catalog", "u:3"]).exit_code == 2


def test_degenerate_two_sum_exit_2(paths):
    r = run(["construct", "two-sum", paths["coloop"], paths["u23"], "--at", "1"])
    assert r.exit_code == 2 and "loop or coloop" in r.stderr


def test_exchange_gens_are_three_quadrics(paths):
    out = json.loads(run(["ideal", "gens", "--method", "exchange", paths["u24"]]).output)
    assert len(out["elements"]) == 3
    assert all(sum(e["lead"].values()) == 2 for e in out["elements"])


def test_series_conn_report(paths):
    r = run(["construct", "series-conn", paths["u23"], "--at", "1", paths["u24"], "--at", "1"])
    out = json.loads(r.output)
    assert out["verified"]["generates"] and out["verified"]["groebner"]
    assert len(out["map"]) == out["matroid"]["bases"].__len__()
    assert out["map"][0]["var"].startswith("z")
    r = run(["construct", "series-conn", paths["u23"], paths["u24"], "--at", "1", "--no-verify"])
    assert "verified" not in json.loads(r.output)


def test_out_option(paths, tmp_path):
    target = tmp_path / "w3.json"
    r = run(["--out", str(target), "catalog", "W3"])
    assert r.exit_code == 0 and r.output == ""
    assert parse_matroid(target.read_text()) == named("W3")


def test_catalog_specs(paths):
    assert parse_matroid(run(["catalog", "u:2,5"]).output) == uniform(2, 5)
    assert parse_matroid(run(["catalog", paths["c4"]]).output) == uniform(3, 4)


def test_minor_commands(paths):
    assert json.loads(run(["minor", "has", paths["u24"], "MK4"]).output) == {"has_minor": False}
    out = json.loads(run(["minor", "excluded-free", paths["mk4"]]).output)
    assert out == {"excluded_minor_free": False, "minors": ["MK4"]}


def test_console_script_runs(paths):
    env = dict(os.environ, PYTHONHASHSEED="7")
    r = subprocess.run(
        [sys.executable, "-m", "matroid_toric.cli", "catalog", "u:1,2"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert parse_matroid(r.stdout) == uniform(1, 2)
