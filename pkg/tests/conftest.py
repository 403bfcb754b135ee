import random

import pytest
from hypothesis import settings, strategies as st

from zhat.product import RingContext

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


@pytest.fixture
def ctx235():
    return RingContext((2, 3, 5), 24)


@pytest.fixture
def ctx2357():
    return RingContext((2, 3, 5, 7), 24)


@pytest.fixture
def rng():
    return random.Random(1234)


@st.composite
def contexts(draw, max_primes=4, precision=st.integers(2, 12)):
    primes = draw(st.lists(st.sampled_from(SMALL_PRIMES), min_size=1, max_size=max_primes, unique=True))
    return RingContext(tuple(sorted(primes)), draw(precision))


@st.composite
def elements(draw, ctx):
    """Product elements with a healthy share of zero and high-valuation components."""
    values = []
    for p in ctx.primes:
        m = p**ctx.precision
        kind = draw(st.sampled_from(["zero", "unit", "any", "power"]))
        if kind == "zero":
            values.append(0)
        elif kind == "power":
            values.append(p ** draw(st.integers(1, ctx.precision)) * draw(st.integers(1, p - 1 if p > 2 else 1)))
        else:
            values.append(draw(st.integers(0, m - 1)))
    return ctx.element(values)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
