from __future__ import annotations

import pytest

from rank2.classify.fixtures import fixture_catalog
from rank2.classify.inventory import reconstruct_inventory
from rank2.classify.report import FullReport, _entry
from rank2.scalars import FieldContext

_criteria: dict[str, str] = {}


@pytest.fixture(scope="session")
def ctx() -> FieldContext:
    return FieldContext()


@pytest.fixture(scope="session")
def catalog(ctx):
    return {f.label: f for f in fixture_catalog(ctx)}


@pytest.fixture(scope="session")
def reports(catalog):
    """Inventory of every fixture, computed once per session."""
    return {label: reconstruct_inventory(f) for label, f in catalog.items()}


@pytest.fixture(scope="session")
def full(reports) -> FullReport:
    return FullReport([_entry(r) for r in reports.values()])


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num = int(name.split("_")[2])
        terminalreporter.write_line(f"criterion {num:2d}: {_criteria[name]}  ({name})")
