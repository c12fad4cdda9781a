"""End-to-end smoke tests for the peaceable module and the queens CLI."""

import json
import os
import subprocess
import xml.etree.ElementTree as ET

import pytest

import peaceable as pq

CLI = os.environ.get("QUEENS_CLI")
needs_cli = pytest.mark.skipif(not CLI, reason="QUEENS_CLI not set")


def run_cli(*args, stdin=None, check=True):
    proc = subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True
    )
    if check and proc.returncode != 0:
        raise AssertionError(
            f"{args} exited {proc.returncode}: {proc.stderr}"
        )
    return proc


def test_bounds():
    assert pq.g_of(18) == 28
    assert pq.m_star(28) == 18
    assert pq.F_of(14) == 17
    assert all(pq.F_of(m) == pq.F_closed(m) for m in range(2, 200))
    assert pq.g_of(10) == 9 == pq.F_closed(10)
    assert pq.g_of(14) == 16 == pq.F_closed(14) - 1
    split = pq.F_split(14)
    assert split["value"] == 17 and split["rc"] + split["diags"] == 14


def test_placements():
    p = pq.nine_queens(11)
    assert len(p) == 9 and p.n == 11
    assert pq.covered_count(p) == 89
    assert pq.attacked_count(p) == 80
    hist = pq.diag_length_histogram(p)
    assert hist == {11: 2, 6: 4, 1: 4}
    best, strategy = pq.construct_best(9, 11)
    assert best == p and strategy == "nine"

    hexa = pq.uneven_hexagon(12, 30)
    assert len(hexa) == 12 == pq.line_budget(hexa)["m"]
    assert pq.covered_count(hexa) <= 12 * 30

    round_trip = pq.placement_from_json(p.to_json())
    assert round_trip == p


def test_search_and_certificates():
    r = pq.exact_min_covered(1, 5)
    assert r["optimum"] == 13
    assert {"n": 5, "queens": [[1, 1]]} in r["witnesses"]

    p = pq.Placement(8, [(1, 1), (2, 1), (1, 2), (2, 2)])
    cert = pq.lower_bound_certificate(p)
    assert cert["sound"] and cert["m"] == 6
    assert cert["total_length"] >= 8 * 6

    report = pq.analyze_report(p, with_certificate=True, with_rings=True)
    assert report["k"] == 4 and report["covered"] == pq.covered_count(p)
    assert report["bounds"]["k_le_f"]
    assert report["certificate"]["m"] == 6

    triple = pq.max_triple_points(2, 2, 2, 6, mode="long-only")
    assert triple["best"] == 3 and len(triple["points"]) == 3


def test_rendering():
    p = pq.Placement(5, [(1, 1), (5, 5)])
    art = pq.render_ascii(p)
    lines = art.strip("\n").split("\n")
    assert len(lines) == 5 and all(len(line) == 5 for line in lines)
    assert sum(line.count("Q") for line in lines) == 2

    svg = pq.render_svg(p, cell_size=16)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")


def test_verify_suites():
    names = pq.suite_names()
    assert "formulas" in names and "all" in names
    (result,) = pq.run_suites("formulas", 12345)
    assert result["ok"] and result["checks"] > 0


def test_tables():
    csv = pq.bound_table_csv(20)
    rows = csv.strip().split("\n")
    assert rows[0] == "m,G,F,source"
    assert "18,28,28,closed-form" in rows


@needs_cli
def test_cli_construct_analyze_round_trip():
    built = run_cli("construct", "--k", "4", "--n", "20")
    doc = json.loads(built.stdout)
    assert doc["stats"]["strategy"] in ("four-corner", "uneven")
    assert doc["stats"]["k"] == 4

    analyzed = run_cli("analyze", "-", "--certificate", stdin=built.stdout)
    report = json.loads(analyzed.stdout)
    assert report["k"] == 4
    assert report["covered"] == doc["stats"]["covered"]
    assert report["certificate"]["sound"]


@needs_cli
def test_cli_tables_and_verify():
    tables = run_cli("tables", "--max-m", "20")
    assert tables.stdout.splitlines()[0] == "m,G,F,source"

    verify = run_cli("verify", "--suite", "formulas")
    results = json.loads(verify.stdout)
    assert results[0]["suite"] == "formulas" and results[0]["ok"]
    assert "formulas" in verify.stderr


@needs_cli
def test_cli_render_svg():
    placement = json.dumps({"n": 6, "queens": [[1, 1], [6, 6]]})
    rendered = run_cli("render", "-", "--format", "svg", stdin=placement)
    ET.fromstring(rendered.stdout)


@needs_cli
def test_cli_exit_codes():
    assert run_cli("--help", check=False).returncode == 0
    assert run_cli("bogus", check=False).returncode == 1
    assert run_cli("verify", "--suite", "nope", check=False).returncode == 1
    small = run_cli("construct", "--k", "5", "--n", "3", check=False)
    assert small.returncode == 2
    assert "error" in small.stderr
