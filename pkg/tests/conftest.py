from __future__ import annotations

import functools

import pytest

from rigid_symbols import Gap, Partition, Theory, enumerate_rigid, parse_partition

B72_TEXT = "9^4 8^2 7^3 6^4 5^4 4^2 3^4 2^2 1^4"
B72_TOP = (0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4)
B72_BOTTOM = (1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 5, 5, 5)

# Desk-scale sweep: totals <= 29 for B and <= 28 for C and D, i.e. ranks 1..14.
SWEEP_MAX_RANK = 14


@pytest.fixture(scope="session")
def b72() -> Partition:
    return parse_partition(B72_TEXT)


@functools.lru_cache(maxsize=None)
def rigid_sweep(theory: str, max_rank: int = SWEEP_MAX_RANK, gap: str = "strict") -> tuple[Partition, ...]:
    return tuple(p for n in range(1, max_rank + 1) for p in enumerate_rigid(n, theory, gap))


def sweep_cases(max_rank: int = SWEEP_MAX_RANK):
    return [(th, p) for th in "BCD" for p in rigid_sweep(th, max_rank)]


# Acceptance summary: tests marked ``criterion(n)`` are grouped and reported
# as one PASS/FAIL line per criterion at the end of the run.
_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    n, title = marker.args
    entry = _criteria.setdefault(n, {"title": title, "failed": [], "ran": 0})
    if report.when == "call":
        entry["ran"] += 1
    if report.failed:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        status = "FAIL" if entry["failed"] or not entry["ran"] else "PASS"
        line = f"criterion {n} ({entry['title']}): {status}"
        if entry["failed"]:
            line += f"  [failing: {', '.join(entry['failed'])}]"
        terminalreporter.write_line(line)
