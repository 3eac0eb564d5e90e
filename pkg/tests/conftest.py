import pytest

from bexsam._rng import make_rng
from bexsam.generator import GenConfig, random_model
from bexsam.model import example_model

_CRITERIA = []


@pytest.fixture
def ex1():
    return example_model((0.1, 0.2, 0.3, 0.4))


def random_models(count, seed, d_range=(2, 6), p_a=0.5):
    """``count`` reproducible models with d drawn uniformly from ``d_range``."""
    out = []
    for c in range(count):
        rng = make_rng(seed, c)
        d = int(rng.integers(d_range[0], d_range[1] + 1))
        out.append(random_model(GenConfig(d=d, p_a=p_a), rng))
    return out


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(name, passed, detail):
        line = "%s  %s: %s" % ("PASS" if passed else "FAIL", name, detail)
        _CRITERIA.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
