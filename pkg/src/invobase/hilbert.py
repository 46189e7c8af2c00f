"""Affine Hilbert function and polynomial from an involutive basis.

With a complete leading-monomial set the monomials inside the cone split
into disjoint involutive sub-cones, one per generator, so counting
reduces to binomial coefficients in the number of multiplicative
variables of each generator.  A brute-force staircase count over all
monomials up to a degree serves as the independent oracle.
"""

from itertools import combinations
from math import comb

from .division import compute_separation
from .monomials import mono_deg, mono_divides


class HilbertInput:
    """Leading monomials with their multiplicative-variable counts."""

    __slots__ = ("n", "lms", "mu")

    def __init__(self, n, lms, mu):
        self.n = n
        self.lms = tuple(lms)
        self.mu = dict(mu)
        for u in self.lms:
            if not 0 <= self.mu[u] <= n:
                raise ValueError("multiplicative count out of range for %s" % (u,))

    @classmethod
    def from_basis(cls, lms, division="janet"):
        """Build from a complete leading-monomial set under a division."""
        lms = tuple(lms)
        sep = compute_separation(division, lms)
        mu = {u: bin(sep.masks[u]).count("1") for u in lms}
        return cls(sep.n, lms, mu)


def _binom(a, b):
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def hf_eval(hin, s):
    """Number of standard monomials of degree <= s (the affine Hilbert
    function of the ideal at s)."""
    if s < 0:
        raise ValueError("s must be >= 0")
    total = _binom(hin.n + s, s)
    covered = 0
    for u in hin.lms:
        d = mono_deg(u)
        m = hin.mu[u]
        if m == 0:
            # the cone degenerates to the single monomial u
            covered += 1 if d <= s else 0
        else:
            for i in range(d, s + 1):
                covered += _binom(i - d + m - 1, m - 1)
    return total - covered


def hp_eval(hin, s):
    """Value of the affine Hilbert polynomial at s; agrees with hf_eval
    for all s past the stabilization degree."""
    if s < 0:
        raise ValueError("s must be >= 0")
    total = _binom(hin.n + s, s)
    covered = 0
    for u in hin.lms:
        covered += _binom(s - mono_deg(u) + hin.mu[u], hin.mu[u])
    return total - covered


def _monomials_up_to(n, s):
    for d in range(s + 1):
        # weak compositions of d into n parts via bars positions
        for bars in combinations(range(d + n - 1), n - 1):
            prev = -1
            exps = []
            for b in bars:
                exps.append(b - prev - 1)
                prev = b
            exps.append(d + n - 2 - prev)
            yield tuple(exps)


def hf_bruteforce(lms, n, s, budget=5_000_000):
    """Count monomials of degree <= s outside the cone of the leading
    monomials, by enumeration."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if comb(n + s, s) > budget:
        raise ValueError("enumeration budget exceeded")
    lms = tuple(lms)
    count = 0
    for w in _monomials_up_to(n, s):
        if not any(mono_divides(u, w) for u in lms):
            count += 1
    return count


def stabilization_degree(hin, limit):
    """Smallest degree past which hp_eval equals hf_eval, scanning up to
    the limit; None when the two still differ there."""
    stable = None
    for s in range(limit + 1):
        if hf_eval(hin, s) == hp_eval(hin, s):
            if stable is None:
                stable = s
        else:
            stable = None
    return stable
