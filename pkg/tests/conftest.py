import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "status": "PASS", "seconds": 0.0})
    if report.when == "call":
        entry["seconds"] = report.duration
    if report.failed:
        entry["status"] = "FAIL"
    elif report.skipped and entry["status"] == "PASS":
        entry["status"] = "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        terminalreporter.write_line(
            f"criterion {number:>2} {e['status']} ({e['seconds']:.2f} s) {e['title']}"
        )
