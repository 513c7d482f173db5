import random

import pytest

from parfrac import QQ, PrimeField

F_SMALL = PrimeField(65537)
FIELDS = [QQ, F_SMALL, PrimeField(7)]


@pytest.fixture
def rng():
    return random.Random(20260101)


@pytest.fixture(params=[QQ, F_SMALL], ids=["QQ", "F65537"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
