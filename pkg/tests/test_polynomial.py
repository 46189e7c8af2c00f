import random

import pytest

from invobase.normalform import ReductionTrace
from invobase.ordering import DEGREVLEX, LEX
from invobase.polynomial import (
    Poly,
    make_poly,
    max_abs_coeff,
    normalize_primitive,
    poly_combine,
    poly_mul_mono,
    poly_str,
    reduce_step,
)
from conftest import P

XY = ["x", "y"]


def test_make_poly_sorts_and_combines():
    p = make_poly([((0, 0), 1), ((2, 1), 3), ((0, 0), -1), ((1, 0), 2)], LEX)
    assert p.terms == (((2, 1), 3), ((1, 0), 2))


def test_normalize_keeps_primitive_with_positive_head():
    p = P("4*y^3 + 1", ["y"], LEX)
    assert normalize_primitive(p) == p
    assert p.terms[0][1] == 4


def test_normalize_sign_and_content():
    p = make_poly([((1, 0), -2), ((0, 1), 2)], LEX, primitive=False)
    q = normalize_primitive(p)
    assert q == P("x - y", XY, LEX)


def test_normalize_zero():
    assert normalize_primitive(Poly()) == Poly()


def test_normalize_idempotent_and_proportional_random():
    rng = random.Random(11)
    for _ in range(300):
        terms = [
            (tuple(rng.randrange(0, 4) for _ in range(3)), rng.randrange(-30, 31))
            for _ in range(rng.randrange(1, 6))
        ]
        p = make_poly(terms, DEGREVLEX, primitive=False)
        q = normalize_primitive(p)
        assert normalize_primitive(q) == q
        if p and q:
            # cross-multiplication test of Q-proportionality
            a, b = p.lc, q.lc
            for (m1, c1), (m2, c2) in zip(p.terms, q.terms):
                assert m1 == m2
                assert c1 * b == c2 * a


def test_reduce_step_table_example(lex):
    h = P("x^2*y^2 - x", XY, lex)
    g = P("x^2*y - 1", XY, lex)
    assert reduce_step(h, g, lex) == P("x - y", XY, lex)


def test_reduce_step_self_reduction(lex):
    h = P("x^2*y - 1", XY, lex)
    assert reduce_step(h, h, lex) == Poly()


def test_reduce_step_spolynomial_chain(lex):
    # y*(x^2*y - 1) - x*(x*y^2 - 1) expands to x - y
    f = poly_mul_mono(P("x^2*y - 1", XY, lex), (0, 1))
    g = poly_mul_mono(P("x*y^2 - 1", XY, lex), (1, 0))
    assert poly_combine(f, 1, g, -1, lex) == P("x - y", XY, lex)


def test_reduce_step_requires_divisibility(lex):
    with pytest.raises(ValueError):
        reduce_step(P("x - y", XY, lex), P("x^2*y - 1", XY, lex), lex)


def test_reduce_step_eliminates_term_never_raises_head(degrevlex):
    rng = random.Random(3)
    for _ in range(200):
        g_terms = [
            (tuple(rng.randrange(0, 3) for _ in range(3)), rng.randrange(-9, 10))
            for _ in range(rng.randrange(1, 5))
        ]
        g = make_poly(g_terms, degrevlex)
        if not g:
            continue
        shift = tuple(rng.randrange(0, 3) for _ in range(3))
        extra = [
            (tuple(rng.randrange(0, 3) for _ in range(3)), rng.randrange(-9, 10))
            for _ in range(rng.randrange(0, 4))
        ]
        h = make_poly(list(poly_mul_mono(g, shift).terms) + extra, degrevlex)
        if not h:
            continue
        idx = rng.randrange(len(h.terms))
        m = h.terms[idx][0]
        from invobase.monomials import mono_divides

        if not mono_divides(g.lm, m):
            continue
        r = reduce_step(h, g, degrevlex, idx)
        assert all(t[0] != m for t in r.terms)
        if idx == 0 and r:
            assert degrevlex.compare(r.lm, h.lm) == -1


def test_reduce_step_trace_events_reexpand(lex):
    from invobase.polynomial import scaled_merge

    h = P("x^2*y^2 - x", XY, lex)
    g = P("x^2*y - 1", XY, lex)
    trace = ReductionTrace(record_events=True)
    r = reduce_step(h, g, lex, trace=trace)
    assert trace.reductions == 1
    a, b, u, gg, strip, result = trace.events[0]
    assert result == r
    # strip * result == a*h - b*(u*g), exactly, which re-expands the step
    # as an explicit combination of h and g
    lhs = [(m, strip * c) for m, c in result.terms]
    rhs = scaled_merge(h.terms, a, poly_mul_mono(gg, u).terms, -b, lex)
    assert lhs == rhs


def test_poly_str_roundtrip_forms(lex):
    p = P("-x + y", XY, lex)
    assert poly_str(p, XY) == "x - y" or poly_str(p, XY) == "-x + y"
    assert P(poly_str(p, XY), XY, lex) == p


def test_max_abs_coeff():
    assert max_abs_coeff(P("8*x^3 + 12*y^3 - 3", XY, LEX)) == 12
    assert max_abs_coeff(Poly()) == 0
