"""Monomial cones, local involutivity, and completion of monomial sets."""

from .division import (
    compute_separation,
    find_all_involutive_divisors,
    quotient_in_mask,
)
from .monomials import mono_deg, mono_div, mono_divides
from .ordering import DEGLEX


class BoundExceeded(Exception):
    """A prolongation left the configured degree bound.

    For a non-Noetherian division (Pommaret) this is the expected way a
    diverging completion surfaces.
    """

    def __init__(self, degree, monomial=None):
        self.degree = degree
        self.monomial = monomial
        msg = "prolongation degree %d exceeds the bound" % degree
        if monomial is not None:
            msg += " (at %s)" % (monomial,)
        super().__init__(msg)


def cone_member(monos, w):
    """Membership of w in the conventional cone of the set."""
    return any(mono_divides(u, w) for u in monos)


def lcone_member(division, monos, w, sep=None):
    """Membership of w in the involutive cone of the set."""
    if sep is None:
        sep = compute_separation(division, monos)
    for u, mask in sep.masks.items():
        q = mono_div(w, u)
        if q is not None and quotient_in_mask(q, mask):
            return True
    return False


def is_locally_involutive(division, monos):
    """Check that every non-multiplicative prolongation stays inside the
    involutive cone; on failure also return the first witness (u, x)."""
    monos = list(monos)
    sep = compute_separation(division, monos)
    n = sep.n
    for u in sorted(monos):
        mask = sep.masks[u]
        for x in range(n):
            if mask >> x & 1:
                continue
            w = u[:x] + (u[x] + 1,) + u[x + 1 :]
            if not find_all_involutive_divisors(sep, w):
                return False, (u, x)
    return True, None


def complete_monomial_set(division, monos, degree_bound, order=DEGLEX):
    """Enlarge a monomial set until it is locally involutive.

    Repeatedly adjoins the order-smallest non-multiplicative prolongation
    that lies outside the involutive cone.  Every added monomial is a
    multiple of an input one, so the conventional cone is unchanged.
    Raises BoundExceeded when the only candidates left are beyond
    degree_bound, which is how a non-Noetherian division shows up.
    """
    U = sorted(set(monos))
    if not U:
        raise ValueError("empty monomial set")
    if degree_bound < max(mono_deg(u) for u in U):
        raise ValueError("degree bound below the input degrees")
    while True:
        sep = compute_separation(division, U)
        n = sep.n
        outside = []
        for u in U:
            mask = sep.masks[u]
            for x in range(n):
                if mask >> x & 1:
                    continue
                w = u[:x] + (u[x] + 1,) + u[x + 1 :]
                if not find_all_involutive_divisors(sep, w):
                    outside.append(w)
        if not outside:
            return tuple(order.sorted(set(U)))
        within = [w for w in set(outside) if mono_deg(w) <= degree_bound]
        if not within:
            w = min(set(outside), key=mono_deg)
            raise BoundExceeded(mono_deg(w), w)
        U.append(order.min(within))
        U.sort()
