import itertools

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion id")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title = mark.args
    _, results = _criteria.setdefault(number, (title, []))
    results.append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, results = _criteria[number]
        status = "PASS" if results and all(r == "passed" for r in results) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title} [{len(results)} test(s)]")


def brute_force_standard(n, gens, d):
    """Degree-d exponent tuples divisible by no generator (plain loops, no package code)."""
    out = []
    for e in itertools.product(range(d + 1), repeat=n):
        if sum(e) != d:
            continue
        if not any(all(g[i] <= e[i] for i in range(n)) for g in gens):
            out.append(e)
    return out
