"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""
import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n, title = int(m.group(1)), m.group(2).replace("_", " ")
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed:
        _results[n] = ("FAIL", title)
    elif report.when == "call":
        _results.setdefault(n, ("PASS", title))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        verdict, title = _results[n]
        terminalreporter.write_line(f"CRITERION {n}: {verdict} ({title})")
