import random
from itertools import combinations_with_replacement

import pytest

from invobase.cones import (
    BoundExceeded,
    complete_monomial_set,
    cone_member,
    is_locally_involutive,
    lcone_member,
)
from invobase.monomials import mono_deg, mono_divides
from invobase.ordering import DEGLEX

TRIO = [(2, 0, 1), (1, 1, 0), (1, 0, 2)]


def test_lcone_membership():
    completed = TRIO + [(2, 1, 0)]
    assert lcone_member("janet", completed, (3, 1, 0))
    for u in TRIO:
        assert lcone_member("janet", TRIO, u)
    assert not lcone_member("janet", TRIO, (2, 1, 0))


def test_local_involutivity_witness():
    ok, witness = is_locally_involutive("janet", TRIO + [(2, 1, 0)])
    assert ok and witness is None
    ok, witness = is_locally_involutive("janet", TRIO)
    assert not ok
    assert witness == ((1, 1, 0), 0)  # x1 * x1x2 escapes the cone


def test_singleton_janet_locally_involutive():
    assert is_locally_involutive("janet", [(2, 3, 1)])[0]


def test_janet_completion_of_trio():
    completed = complete_monomial_set("janet", TRIO, 10)
    assert set(completed) == set(TRIO) | {(2, 1, 0)}


def test_lexinduced_completion_of_trio():
    completed = complete_monomial_set("lexinduced", TRIO, 10)
    assert set(completed) == set(TRIO) | {(1, 1, 1)}


def test_pommaret_completion_diverges():
    with pytest.raises(BoundExceeded):
        complete_monomial_set("pommaret", TRIO, 12)


def test_bound_below_input_rejected():
    with pytest.raises(ValueError):
        complete_monomial_set("janet", TRIO, 2)


def monomials_up_to(n, s):
    out = [(0,) * n]
    for d in range(1, s + 1):
        for combo in combinations_with_replacement(range(n), d):
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
    return out


@pytest.mark.parametrize("division", ["janet", "lexinduced"])
def test_completion_soundness_random(division):
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randrange(2, 4)
        monos = sorted(
            {tuple(rng.randrange(0, 3) for _ in range(n)) for _ in range(rng.randrange(1, 5))}
        )
        bound = 2 * max(mono_deg(u) for u in monos) + n
        completed = complete_monomial_set(division, monos, bound)
        # every adjoined monomial stays inside the original cone
        for u in completed:
            assert cone_member(monos, u)
        assert is_locally_involutive(division, completed)[0]
        # continuity spot check: involutive and conventional cones agree
        # on all monomials up to the bound
        for w in monomials_up_to(n, bound):
            assert lcone_member(division, completed, w) == cone_member(monos, w)
