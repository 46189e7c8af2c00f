import random

import pytest

from invobase.monomials import (
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
    mono_proper_divides,
    mono_str,
)


def test_lcm_componentwise_max():
    assert mono_lcm((2, 1), (1, 3)) == (2, 3)


def test_lcm_identity_element():
    u = (3, 0, 2)
    assert mono_lcm(u, mono_one(3)) == u


def test_lcm_disjoint_supports_multiply():
    assert mono_lcm((1, 0, 1), (0, 1, 1)) == mono_mul((1, 0, 0), (0, 1, 1))


def test_div_componentwise():
    assert mono_div((2, 2), (2, 1)) == (0, 1)


def test_div_underflow_is_none():
    assert mono_div((2, 1), (1, 2)) is None


def test_div_self_gives_one_and_not_proper():
    u = (1, 2, 0)
    assert mono_div(u, u) == mono_one(3)
    assert not mono_proper_divides(u, u)


def test_arity_mismatch_raises():
    with pytest.raises(ValueError):
        mono_lcm((1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        mono_div((1, 2), (1,))


def test_lcm_properties_random():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(1, 5)
        u = tuple(rng.randrange(0, 5) for _ in range(n))
        v = tuple(rng.randrange(0, 5) for _ in range(n))
        w = tuple(rng.randrange(0, 5) for _ in range(n))
        assert mono_lcm(u, v) == mono_lcm(v, u)
        assert mono_lcm(mono_lcm(u, v), w) == mono_lcm(u, mono_lcm(v, w))
        assert mono_lcm(u, u) == u
        # lcm is always divisible by both arguments
        assert mono_div(mono_lcm(u, v), u) is not None
        assert mono_div(mono_lcm(u, v), v) is not None
        q = mono_div(v, u)
        assert (q is not None) == mono_divides(u, v)
        if q is not None:
            assert mono_mul(u, q) == v


def test_deg_and_str():
    assert mono_deg((2, 0, 3)) == 5
    assert mono_str((2, 0, 3), ["x", "y", "z"]) == "x^2*z^3"
    assert mono_str((0, 0), ["x", "y"]) == "1"
