import pytest

from invobase import Order, parse_polynomial


@pytest.fixture
def lex():
    return Order("lex")


@pytest.fixture
def degrevlex():
    return Order("degrevlex")


def P(text, names, order):
    """Shorthand polynomial constructor for tests."""
    return parse_polynomial(text, names, order)
