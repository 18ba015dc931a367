import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "puretop", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "puretop"))

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record and print one PASS/FAIL line; returns whether the criterion held."""
    def report(number: int, ok: bool, text: str, elapsed: float, limit: float = None) -> bool:
        timed = limit is None or elapsed < limit
        bound = f" (limit {limit:g}s)" if limit is not None else ""
        line = f"criterion {number}: {'PASS' if ok and timed else 'FAIL'} {text} [{elapsed:.2f}s{bound}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok and timed
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
