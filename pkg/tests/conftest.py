import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from nambu_poisson.field import GF, QQ  # noqa: E402
from nambu_poisson.fixtures import all_fixtures  # noqa: E402

FIXTURE_NAMES = ("zero2", "zero3", "zero4", "trunc3", "b4")


@pytest.fixture(params=FIXTURE_NAMES)
def fixture_algebra(request):
    return request.param, all_fixtures()[request.param]


@pytest.fixture(params=[QQ, GF(3)], ids=["QQ", "GF3"])
def field(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
