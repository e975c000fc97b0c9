"""Shared fixtures and the per-criterion PASS/FAIL summary for the acceptance suite."""

from __future__ import annotations

import pytest

from orecode.config import data_path, load_config

CRITERIA = {
    1: "factorization fidelity",
    2: "dual containment of shipped rows",
    3: "Gray image classical parameters",
    4: "quantum parameters",
    5: "division algorithm property suite",
    6: "derivation and automorphism laws",
    7: "decomposition equivalence",
    8: "duality transport",
    9: "CSS machinery",
    10: "negative controls",
}

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    crit = getattr(report, "_criterion", None)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes.setdefault(crit, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = int(m.args[0])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n:2d} ({CRITERIA[n]}): NOT RUN")
            continue
        bad = [nid for nid, out in results if out != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        tr.write_line(f"criterion {n:2d} ({CRITERIA[n]}): {verdict} [{len(results) - len(bad)}/{len(results)} tests passed]")


@pytest.fixture(scope="session")
def examples_cfg():
    return load_config(data_path("examples.cfg"))


@pytest.fixture(scope="session")
def table_cfg():
    return load_config(data_path("code_table.cfg"))
