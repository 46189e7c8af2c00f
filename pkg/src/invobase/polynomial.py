"""Polynomials over Q kept as primitive integer representatives.

A polynomial is a tuple of (monomial, coefficient) terms, strictly
descending under the active order, with integer coefficients whose gcd
is 1 and whose leading coefficient is positive.  Every operation that
could break that form re-normalizes, so two polynomials represent the
same point of the Q-projective class iff they are equal.
"""

from math import gcd

from .monomials import mono_deg, mono_div, mono_mul, mono_str


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = tuple(terms)

    @property
    def lm(self):
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    @property
    def lt(self):
        return self.terms[0]

    @property
    def lm_deg(self):
        return mono_deg(self.terms[0][0])

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "Poly(%s)" % poly_str(self)


ZERO = Poly()


def make_poly(pairs, order, primitive=True):
    """Build a polynomial from (monomial, coefficient) pairs.

    Duplicate monomials are combined and zero coefficients dropped; terms
    are sorted descending under `order`.
    """
    acc = {}
    for m, c in pairs:
        c = acc.get(m, 0) + c
        if c:
            acc[m] = c
        elif m in acc:
            del acc[m]
    terms = sorted(acc.items(), key=lambda t: order.key(t[0]), reverse=True)
    p = Poly(terms)
    return normalize_primitive(p) if primitive else p


def normalize_primitive(p):
    """Strip the content and make the leading coefficient positive.

    Zero maps to zero.  Idempotent, and preserves the Q-proportionality
    class of the input.
    """
    if not p:
        return p
    g = 0
    for _, c in p.terms:
        g = gcd(g, c)
        if g == 1:
            break
    if p.terms[0][1] < 0:
        g = -g
    if g == 1:
        return p
    return Poly((m, c // g) for m, c in p.terms)


def poly_mul_mono(p, u):
    """Multiply by a monomial; admissible orders keep the term order."""
    return Poly((mono_mul(m, u), c) for m, c in p.terms)


def poly_neg(p):
    return Poly((m, -c) for m, c in p.terms)


def scaled_merge(terms_a, sa, terms_b, sb, order):
    """Merge two descending term sequences as sa*a + sb*b, unreduced."""
    key = order.key
    out = []
    i, j, na, nb = 0, 0, len(terms_a), len(terms_b)
    while i < na and j < nb:
        ma, ca = terms_a[i]
        mb, cb = terms_b[j]
        if ma == mb:
            c = sa * ca + sb * cb
            if c:
                out.append((ma, c))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            out.append((ma, sa * ca))
            i += 1
        else:
            out.append((mb, sb * cb))
            j += 1
    while i < na:
        m, c = terms_a[i]
        out.append((m, sa * c))
        i += 1
    while j < nb:
        m, c = terms_b[j]
        out.append((m, sb * c))
        j += 1
    return out


def poly_combine(a, sa, b, sb, order):
    """Primitive representative of sa*a + sb*b."""
    return normalize_primitive(Poly(scaled_merge(a.terms, sa, b.terms, sb, order)))


def reduce_step(h, g, order, index=0, trace=None):
    """One elementary reduction of h at its index-th term by g.

    Computes a primitive representative of h - g*t/lt(g) where t is the
    targeted term, cross-multiplying by the leading coefficients over
    their gcd instead of introducing fractions.  The targeted term is
    eliminated; when index is 0 the leading monomial strictly drops.
    """
    m, c = h.terms[index]
    u = mono_div(m, g.lm)
    if u is None:
        raise ValueError("lm(g) does not divide the targeted term")
    glc = g.lc
    d = gcd(c, glc)
    a, b = glc // d, c // d
    rest = h.terms[:index] + h.terms[index + 1 :]
    shifted = tuple((mono_mul(gm, u), gc) for gm, gc in g.terms[1:])
    raw = scaled_merge(rest, a, shifted, -b, order)
    result, strip = _strip_content(raw)
    if trace is not None:
        trace.note_step(a, b, u, g, strip, result)
    return result


def _strip_content(raw_terms):
    """Primitive polynomial plus the signed content that was removed."""
    if not raw_terms:
        return ZERO, 1
    g = 0
    for _, c in raw_terms:
        g = gcd(g, c)
        if g == 1:
            break
    if raw_terms[0][1] < 0:
        g = -g
    if g == 1:
        return Poly(raw_terms), 1
    return Poly((m, c // g) for m, c in raw_terms), g


def max_abs_coeff(p):
    return max((abs(c) for _, c in p.terms), default=0)


def coeff_digits(value):
    """Decimal digits of |value| (0 for 0)."""
    return len(str(abs(value))) if value else 0


def coeff_words(value):
    """64-bit words occupied by |value| (0 for 0)."""
    if not value:
        return 0
    return -(-abs(value).bit_length() // 64)


def poly_str(p, names=None):
    """Render a polynomial in the ASCII input grammar."""
    if not p:
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        ms = mono_str(m, names)
        if ms == "1":
            body = str(mag)
        elif mag == 1:
            body = ms
        else:
            body = "%d*%s" % (mag, ms)
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append("%s %s" % (sign, body))
    return " ".join(parts)
