from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from aisle_router.formats import loads_instance
from helpers import ACCEPTANCE_LINES, FIXTURES

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def counterexample():
    return loads_instance((FIXTURES / "counterexample.json").read_text())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
