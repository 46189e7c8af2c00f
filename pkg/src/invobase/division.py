"""Involutive divisions: Janet, Pommaret, and the lexicographically
induced division, with their separations of variables and divisor search.

A separation assigns every monomial of a finite set its multiplicative
variables; the quotient of an involutive division step may only use
those.  Janet and the lex-induced division are Noetherian, Pommaret is
not, which completion code has to guard against.
"""

from itertools import combinations

from .monomials import mono_deg, mono_div, mono_lcm, mono_support_mask
from .ordering import LEX

DIVISIONS = ("janet", "pommaret", "lexinduced")
NOETHERIAN = {"janet": True, "pommaret": False, "lexinduced": True}


class Separation:
    """Multiplicative-variable assignment for one monomial set snapshot."""

    __slots__ = ("n", "masks")

    def __init__(self, n, masks):
        self.n = n
        self.masks = masks  # monomial -> bitmask of multiplicative variables

    def mult_mask(self, u):
        return self.masks[u]

    def multiplicative(self, u):
        m = self.masks[u]
        return frozenset(i for i in range(self.n) if m >> i & 1)

    def nonmultiplicative(self, u):
        m = self.masks[u]
        return frozenset(i for i in range(self.n) if not m >> i & 1)

    def monomials(self):
        return self.masks.keys()


def _janet_masks(monos, n):
    # Group by exponent prefixes, one variable at a time: x_i is
    # multiplicative for u iff deg_i(u) is maximal within u's group
    # [deg_1(u), ..., deg_{i-1}(u)].
    masks = {u: 0 for u in monos}
    groups = [list(monos)]
    for i in range(n):
        next_groups = []
        for group in groups:
            top = max(u[i] for u in group)
            by_deg = {}
            for u in group:
                if u[i] == top:
                    masks[u] |= 1 << i
                by_deg.setdefault(u[i], []).append(u)
            next_groups.extend(by_deg.values())
        groups = next_groups
    return masks


def _pommaret_mask(u, n):
    k = -1
    for i in range(n - 1, -1, -1):
        if u[i]:
            k = i
            break
    if k < 0:
        return (1 << n) - 1
    mask = 0
    for i in range(k, n):
        mask |= 1 << i
    return mask


def _lexinduced_masks(monos, n):
    masks = {}
    key = LEX.key
    for u in monos:
        mask = (1 << n) - 1
        ku = key(u)
        for v in monos:
            if key(v) < ku:
                for i in range(n):
                    if u[i] < v[i]:
                        mask &= ~(1 << i)
        masks[u] = mask
    return masks


def compute_separation(division, monos):
    """Separation of variables for a finite monomial set."""
    monos = list(monos)
    if not monos:
        raise ValueError("empty monomial set")
    n = len(monos[0])
    if any(len(u) != n for u in monos):
        raise ValueError("arity mismatch in monomial set")
    if division == "janet":
        masks = _janet_masks(monos, n)
    elif division == "pommaret":
        masks = {u: _pommaret_mask(u, n) for u in monos}
    elif division == "lexinduced":
        masks = _lexinduced_masks(monos, n)
    else:
        raise ValueError("unknown division %r" % (division,))
    return Separation(n, masks)


def quotient_in_mask(q, mask):
    return mono_support_mask(q) & ~mask == 0


def involutive_divides(division, monos, u, w):
    """True iff u involutively divides w with respect to the set."""
    sep = compute_separation(division, monos)
    if u not in sep.masks:
        raise ValueError("%r is not a member of the set" % (u,))
    q = mono_div(w, u)
    return q is not None and quotient_in_mask(q, sep.masks[u])


def find_all_involutive_divisors(sep, w):
    """All set members involutively dividing w, in set order."""
    out = []
    for u, mask in sep.masks.items():
        q = mono_div(w, u)
        if q is not None and quotient_in_mask(q, mask):
            out.append(u)
    return out


def is_autoreduced(sep):
    """No member involutively divides another member."""
    for u in sep.masks:
        for v in find_all_involutive_divisors(sep, u):
            if v != u:
                return False
    return True


def find_involutive_divisor_scan(division, monos, w, sep=None):
    """Reference divisor search by linear scan.

    Returns a member involutively dividing w (the first in set order) or
    None.  For an autoreduced set the divisor is unique; finding several
    in one is a separation bug and raises.
    """
    if sep is None:
        sep = compute_separation(division, monos)
    hits = find_all_involutive_divisors(sep, w)
    if len(hits) > 1 and is_autoreduced(sep):
        raise AssertionError("multiple involutive divisors in an autoreduced set")
    return hits[0] if hits else None


def _cones_intersect(sep, u, v):
    # u*M(u)* meets v*M(v)* iff their lcm lies in both cones.
    w = mono_lcm(u, v)
    return quotient_in_mask(mono_div(w, u), sep.masks[u]) and quotient_in_mask(
        mono_div(w, v), sep.masks[v]
    )


def axiom_check(division, monos, subset_cap=6, samples=50, rng=None):
    """Exhaustively verify the three defining conditions of an involutive
    division on one concrete set; returns a list of violations.

    1. intersecting cones imply one generator involutively divides the other,
    2. v in the cone of u implies M(v) is contained in M(u),
    3. shrinking the set never shrinks a multiplicative set
       (all subsets when |U| <= subset_cap, random subsets otherwise).
    """
    monos = list(monos)
    sep = compute_separation(division, monos)
    violations = []
    for u in monos:
        for v in monos:
            if u == v:
                continue
            if _cones_intersect(sep, u, v):
                qu = mono_div(u, v)
                qv = mono_div(v, u)
                in_v = qu is not None and quotient_in_mask(qu, sep.masks[v])
                in_u = qv is not None and quotient_in_mask(qv, sep.masks[u])
                if not (in_u or in_v):
                    violations.append(("cone-overlap", u, v))
            qv = mono_div(v, u)
            if qv is not None and quotient_in_mask(qv, sep.masks[u]):
                if sep.masks[v] & ~sep.masks[u]:
                    violations.append(("divisor-monotonicity", u, v))
    if len(monos) <= subset_cap:
        subsets = []
        for r in range(1, len(monos)):
            subsets.extend(combinations(monos, r))
    else:
        import random

        rng = rng or random.Random(0)
        subsets = []
        for _ in range(samples):
            r = rng.randrange(1, len(monos))
            subsets.append(tuple(rng.sample(monos, r)))
    for sub in subsets:
        sub_sep = compute_separation(division, sub)
        for u in sub:
            if sep.masks[u] & ~sub_sep.masks[u]:
                violations.append(("subset-monotonicity", u, sub))
    return violations
