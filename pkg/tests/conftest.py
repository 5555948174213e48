import re

_CRITERIA: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)_(\w+?)(\[|$)", report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        key = f"{m.group(1)} {m.group(2)}"
        _CRITERIA.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        outcomes = _CRITERIA[key]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {key}")
