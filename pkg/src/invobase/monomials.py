"""Monomial primitives: dense exponent tuples of a fixed arity."""

from math import gcd


def mono_one(n):
    """The unit monomial in n variables."""
    return (0,) * n


def mono_var(i, n):
    """The monomial x_i (0-based) in n variables."""
    return tuple(1 if j == i else 0 for j in range(n))


def mono_deg(u):
    """Total degree of u."""
    return sum(u)


def mono_mul(u, v):
    if len(u) != len(v):
        raise ValueError("arity mismatch: %d vs %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def mono_lcm(u, v):
    """Componentwise max of the exponent vectors."""
    if len(u) != len(v):
        raise ValueError("arity mismatch: %d vs %d" % (len(u), len(v)))
    return tuple(a if a > b else b for a, b in zip(u, v))


def mono_div(v, u):
    """Return v/u when u divides v componentwise, else None."""
    if len(u) != len(v):
        raise ValueError("arity mismatch: %d vs %d" % (len(u), len(v)))
    q = []
    for a, b in zip(v, u):
        if a < b:
            return None
        q.append(a - b)
    return tuple(q)


def mono_divides(u, v):
    """True when u divides v (componentwise <=)."""
    return all(a <= b for a, b in zip(u, v))


def mono_proper_divides(u, v):
    """True when u divides v and deg(u) < deg(v)."""
    return mono_divides(u, v) and sum(u) < sum(v)


def mono_support(u):
    """Indices of variables occurring in u."""
    return tuple(i for i, e in enumerate(u) if e)


def mono_support_mask(u):
    """Bitmask of variables occurring in u (bit i for x_i)."""
    m = 0
    for i, e in enumerate(u):
        if e:
            m |= 1 << i
    return m


def mono_str(u, names=None):
    """Render u as a product of powers, '1' for the unit monomial."""
    if names is None:
        names = ["x%d" % (i + 1) for i in range(len(u))]
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


def content_gcd(values):
    """gcd of an iterable of integers, 0 for an empty iterable."""
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g
