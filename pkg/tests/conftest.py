import pytest

from conchoidal.geometry import ParamCurve
from conchoidal.ratfn import RatFn

t = RatFn.x("t")


@pytest.fixture(scope="session")
def curves():
    return {
        "parabola": ParamCurve(t, t ** 2),
        "circle": ParamCurve(2 * t / (t ** 2 + 1), (t ** 2 - 1) / (t ** 2 + 1)),
        "ellipse": ParamCurve(4 * t / (t ** 2 + 1), 3 * (t ** 2 - 1) / (t ** 2 + 1)),
        "hyperbola": ParamCurve((-1 - t ** 2) / (-1 + t ** 2), 2 * t / (-1 + t ** 2)),
        "genus2": ParamCurve(1 / t, t ** 3),
        "line": ParamCurve(t, RatFn.const(0)),
        "cubic": ParamCurve(t ** 2 - 1, t ** 3 - t),
    }


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_ACCEPTANCE.items(), key=lambda kv: _criterion_number(kv[0])):
        name = nodeid.split("::")[-1]
        n = _criterion_number(nodeid)
        label = name.split("_", 3)[-1].replace("_", " ")
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} [{verdict}] {label}")


def _criterion_number(nodeid):
    name = nodeid.split("::")[-1]
    try:
        return int(name.split("_")[2])
    except (IndexError, ValueError):
        return 99
