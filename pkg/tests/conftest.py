import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    failed = report.failed
    if report.when == "call" or failed:
        prev = _criteria.get(name, ("PASS", ""))[0]
        status = "FAIL" if failed or prev == "FAIL" else ("SKIP" if report.skipped else "PASS")
        _criteria[name] = (status, f"{report.duration:.2f}s")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_")[2])):
        status, took = _criteria[name]
        terminalreporter.write_line(f"{status}  {name}  ({took})")
