from math import gcd

import pytest
from hypothesis import settings

# sympy oracles make individual examples slow; correctness, not speed, is under test here
settings.register_profile("exact", deadline=None, max_examples=80)
settings.load_profile("exact")

_ACCEPTANCE = []


def coprime_pairs(n_max, m_min=1):
    return [(m, n) for n in range(2, n_max + 1) for m in range(m_min, n) if gcd(m, n) == 1]


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def pairs():
    return coprime_pairs
