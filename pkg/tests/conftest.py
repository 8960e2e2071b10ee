import os

import pytest
from diagrams import FIGURE_EIGHT, TREFOIL
from hypothesis import HealthCheck, settings

from altwrithe.corpus import data_text
from altwrithe.diagram import parse_pd

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL, "trefoil")


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT, "figure-eight")


@pytest.fixture
def d1():
    return parse_pd(data_text("d1.pd"), "D1")


@pytest.fixture
def d2():
    return parse_pd(data_text("d2.pd"), "D2")


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.RESULTS):
            terminalreporter.write_line(line)
