"""Normal forms: conventional, full involutive, and involutive tail."""

from collections import Counter

from .division import compute_separation, find_all_involutive_divisors
from .monomials import mono_divides
from .polynomial import coeff_digits, coeff_words, max_abs_coeff, reduce_step


class ReductionTrace:
    """Counters for one reduction run: elementary steps, the largest
    intermediate coefficient seen, and per-reductor usage."""

    def __init__(self, record_events=False):
        self.reductions = 0
        self.max_coeff = 0
        self.usage = Counter()
        self.events = [] if record_events else None

    def note_step(self, a, b, u, g, strip, result):
        self.reductions += 1
        self.usage[g.lm] += 1
        c = max_abs_coeff(result)
        if c > self.max_coeff:
            self.max_coeff = c
        if self.events is not None:
            self.events.append((a, b, u, g, strip, result))

    @property
    def max_coeff_digits(self):
        return coeff_digits(self.max_coeff)

    @property
    def max_coeff_words(self):
        return coeff_words(self.max_coeff)


def reduce_by(h, divisor_lookup, order, trace=None, start=0):
    """Eliminate reducible terms of h, highest first, via a lookup that
    maps a monomial to a reductor polynomial or None."""
    i = start
    while h and i < len(h.terms):
        g = divisor_lookup(h.terms[i][0])
        if g is None:
            i += 1
        else:
            h = reduce_step(h, g, order, i, trace)
    return h


def _conv_lookup(F):
    F = list(F)
    if any(not f for f in F):
        raise ValueError("zero polynomial in the reductor set")

    def lookup(m):
        # ties broken by lowest index, for determinism
        for f in F:
            if mono_divides(f.lm, m):
                return f
        return None

    return lookup


def _inv_lookup(G, division):
    G = list(G)
    if any(not g for g in G):
        raise ValueError("zero polynomial in the reductor set")
    by_lm = {}
    for g in G:
        if g.lm in by_lm:
            raise ValueError("duplicate leading monomial in the reductor set")
        by_lm[g.lm] = g
    sep = compute_separation(division, by_lm.keys())

    def lookup(m):
        hits = find_all_involutive_divisors(sep, m)
        if not hits:
            return None
        if len(hits) > 1:
            raise ValueError(
                "reductor set is not involutively autoreduced: %s has %d divisors"
                % (m, len(hits))
            )
        return by_lm[hits[0]]

    return lookup


def conv_normal_form(h, F, order, trace=None):
    """Normal form modulo F under conventional division: no term of the
    result is divisible by any leading monomial of F."""
    F = list(F)
    if not F:
        return h
    return reduce_by(h, _conv_lookup(F), order, trace)


def inv_normal_form(p, G, order, division, trace=None):
    """Full involutive normal form modulo an autoreduced set G.

    Every elementary step uses the unique involutive reductor of the
    targeted term; more than one divisor means G violates the
    autoreduction precondition and raises.
    """
    G = list(G)
    if not G:
        return p
    return reduce_by(p, _inv_lookup(G, division), order, trace)


def tail_normal_form(p, G, order, division, trace=None):
    """Involutive normal form of a head-irreducible polynomial; reduces
    tail terms only, so the leading monomial is preserved."""
    G = list(G)
    if not p or not G:
        return p
    lookup = _inv_lookup(G, division)
    if lookup(p.lm) is not None:
        raise ValueError("leading monomial of p is involutively reducible")
    return reduce_by(p, lookup, order, trace, start=1)
