import json
import os
import subprocess

import pytest

CLI = os.environ.get("WR_CLI", "weyl-restrict")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_dump_rootsys_b3_has_18_roots():
    r = run("dump", "rootsys", "--type", "B", "--rank", "3")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    assert d["schema"] == "weyl-restrict/1"
    assert len(d["root_system"]["roots"]) == 18


def test_dump_xi_and_catalog():
    xi = json.loads(run("dump", "xi", "--type", "C", "--rank", "3").stdout)
    assert len(xi["xi"]["vectors"]) == 3
    cat = json.loads(run("dump", "catalog").stdout)
    assert len(cat["catalog"]["families"]) == 11


def test_dump_size_cap():
    r = run("dump", "weyl", "--type", "B", "--rank", "8")
    assert r.returncode == 2
    assert "size cap" in r.stderr


def test_json_reports_are_byte_identical():
    args = ["verify", "omega-*|pw-coeff/A/*", "--seed", "5", "--samples", "200", "--json"]
    a, b = run(*args), run(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    d = json.loads(a.stdout)
    ids = [x["id"] for x in d["reports"]]
    assert ids == sorted(ids)
    assert all("seconds" not in x for x in d["reports"])


def test_seed_changes_samples():
    a = run("verify", "omega-subset/A/2", "--seed", "1", "--json").stdout
    b = run("verify", "omega-subset/A/2", "--seed", "2", "--json").stdout
    assert a != b


def test_radius_table():
    r = run("verify", "radius", "--all")
    assert r.returncode == 0
    lines = [l for l in r.stdout.splitlines() if l.startswith("PASS")]
    assert len(lines) == 4
    assert "sqrt(2)*pi" in lines[0] and "2*pi" in lines[1]


def test_pfaffian_report():
    r = run("verify", "invariants", "--type", "D", "--n", "4", "--k", "5", "--json")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    pf = [x for x in d["reports"] if x["id"] == "pfaffian/D/4-5"][0]
    assert pf["witness"]["pfaffian_odd"] and not pf["witness"]["pfaffian_in_image"]


def test_failing_check_exits_one_with_witness():
    r = run("verify", "branching", "--type", "B", "--n", "2", "--k", "3", "--json")
    assert r.returncode == 1
    rep = json.loads(r.stdout)["reports"][0]
    assert rep["status"] == "FAIL"
    assert rep["witness"]["weights"]


@pytest.mark.parametrize("args", [
    ["verify", "no-such-check"],
    ["verify", "restriction", "--n", "3", "--k", "2"],
    ["frobnicate"],
    ["dump", "rootsys"],
    ["branch", "--type", "A", "--n", "1", "--k", "2", "--weight", "x"],
])
def test_usage_errors_exit_two(args):
    assert run(*args).returncode == 2


def test_branch_text():
    r = run("branch", "--type", "A", "--n", "1", "--k", "2", "--weight", "1,1")
    assert r.returncode == 0
    assert r.stdout.startswith("dim 8 = ")
