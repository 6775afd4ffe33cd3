import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from polytree import IntPolynomial  # noqa: E402


def polynomials(max_degree=5, bound=8):
    return st.lists(st.integers(-bound, bound), min_size=1, max_size=max_degree + 1).map(IntPolynomial)


def _make_permutational(coeffs):
    c = list(coeffs) + [0] * max(0, 2 - len(coeffs))
    if c[1] % 2 == 0:
        c[1] += 1
    if sum(c[2::2]) % 2:
        c[2] += 1
    if sum(c[3::2]) % 2:
        c[3] += 1
    return IntPolynomial(c)


def permutational_polynomials(max_degree=5, bound=8):
    """Random coefficients, nudged by one where needed to meet the three parity conditions."""
    return st.lists(st.integers(-bound, bound), min_size=1, max_size=max_degree + 1).map(_make_permutational)


@pytest.fixture
def worked():
    return IntPolynomial([1, 3, 2])


ACCEPTANCE_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        number, title = marker.args
        ACCEPTANCE_RESULTS[number] = (title, report.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}")
