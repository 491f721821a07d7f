"""Acceptance bookkeeping: tests tagged ``@pytest.mark.criterion(k, title)``
are grouped and reported as one PASS/FAIL line per criterion."""
import pytest

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    entry = _results.setdefault(number, {"title": title, "passed": 0, "failed": 0})
    if rep.failed:
        entry["failed"] += 1
    elif rep.when == "call" and rep.passed:
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        e = _results[number]
        ok = e["failed"] == 0 and e["passed"] > 0
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if ok else 'FAIL'} - {e['title']} "
            f"({e['passed']} passed, {e['failed']} failed)")
