from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hopf_forest import config
from hopf_forest.combinatorics import enumerate_objects
from hopf_forest.lincomb import LinComb

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
symbols = st.sampled_from(["x", "y", "z", "u", "v"])
lincombs = st.dictionaries(symbols, rationals, max_size=5).map(LinComb)


def objects(kind: str, max_degree: int, min_degree: int = 0):
    pool = [x for n in range(min_degree, max_degree + 1) for x in enumerate_objects(kind, n)]
    return st.sampled_from(pool)


@pytest.fixture(autouse=True)
def default_limits():
    saved = config.get_limits()
    yield
    config.set_limits(saved)


def frac(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)


# one summary line per acceptance criterion
_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    _criteria[n] = (title, "fail" if call.excinfo is not None else "pass")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d} {status.upper():4s} {title}")
