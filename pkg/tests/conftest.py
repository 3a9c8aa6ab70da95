import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "Paley conference matrices",
    2: "Paley cubes are class 2",
    3: "coefficient theorem, both directions",
    4: "Paley cube matches coefficient construction",
    5: "AST correctness and closed-form p tensors",
    6: "converse constructions and corruption rejection",
    7: "Latin hypercubes",
    8: "orthogonal families and recursion",
    9: "symmetric design hypercubes",
    10: "single-cell corruption sensitivity",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _outcomes.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        if k not in _outcomes:
            continue
        status = "PASS" if all(_outcomes[k]) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {CRITERIA[k]}")
