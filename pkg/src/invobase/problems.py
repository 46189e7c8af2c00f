"""Problem files, polynomial text parsing, and benchmark generators.

A problem file is a couple of header lines followed by one polynomial
per line:

    vars: x y z
    order: degrevlex
    division: janet        # optional
    x^2*y - 1
    x*y^2 - 1

Coefficients are integers or rationals a/b; polynomials are stored in
primitive integer form, so rational inputs are scaled by the common
denominator on the way in.
"""

import re
from fractions import Fraction
from math import gcd

from .monomials import mono_one
from .ordering import Order
from .polynomial import Poly, make_poly, poly_str

DEFAULT_ORDER = "degrevlex"
DEFAULT_DIVISION = "janet"


class ParseError(Exception):
    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__("line %d, column %d: %s" % (line, col, message))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*|\+|-|/))")


def _tokenize(text, lineno):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ParseError("unexpected character %r" % stripped[0], lineno, col)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1) + 1))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2) + 1))
        else:
            out.append(("op", m.group(3), m.start(3) + 1))
        pos = m.end()
    return out


def parse_polynomial(text, names, order, lineno=1):
    """Parse one polynomial line into primitive integer form."""
    var_index = {name: i for i, name in enumerate(names)}
    n = len(names)
    toks = _tokenize(text, lineno)
    if not toks:
        raise ParseError("empty polynomial", lineno, 1)
    pos = 0
    terms = []

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, len(text) + 1)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_factor(coeff, exps):
        kind, value, col = take()
        if kind == "int":
            k2, v2, _ = peek()
            if k2 == "op" and v2 == "/":
                take()
                k3, v3, c3 = take()
                if k3 != "int":
                    raise ParseError("expected integer denominator", lineno, c3)
                if v3 == 0:
                    raise ParseError("zero denominator", lineno, c3)
                return coeff * Fraction(value, v3), exps
            return coeff * value, exps
        if kind == "name":
            if value not in var_index:
                raise ParseError("undeclared variable %r" % value, lineno, col)
            power = 1
            k2, v2, _ = peek()
            if k2 == "op" and v2 == "^":
                take()
                k3, v3, c3 = take()
                if k3 != "int":
                    raise ParseError("expected integer exponent", lineno, c3)
                power = v3
            i = var_index[value]
            exps = exps[:i] + (exps[i] + power,) + exps[i + 1 :]
            return coeff, exps
        raise ParseError("expected a coefficient or variable", lineno, col)

    while pos < len(toks):
        sign = 1
        kind, value, col = peek()
        while kind == "op" and value in "+-":
            take()
            if value == "-":
                sign = -sign
            kind, value, col = peek()
        if kind is None:
            raise ParseError("dangling sign", lineno, col)
        coeff, exps = parse_factor(Fraction(sign), mono_one(n))
        while True:
            kind, value, col = peek()
            if kind == "op" and value == "*":
                take()
                coeff, exps = parse_factor(coeff, exps)
            else:
                break
        if kind == "op" and value in "+-":
            pass
        elif kind is not None:
            raise ParseError("unexpected token %r" % (value,), lineno, col)
        terms.append((exps, coeff))

    denom = 1
    for _, c in terms:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return make_poly(((m, int(c * denom)) for m, c in terms), order)


def parse_system(text):
    """Parse a problem file into (polynomials, names, defaults).

    defaults carries the order and division named in the header, for the
    CLI to merge with its flags.
    """
    names = None
    order_name = DEFAULT_ORDER
    division = DEFAULT_DIVISION
    order = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split(":", 1)
        if len(head) == 2 and head[0].strip() in ("vars", "order", "division"):
            key = head[0].strip()
            value = head[1].strip()
            if key == "vars":
                names = value.replace(",", " ").split()
                if not names or len(set(names)) != len(names):
                    raise ParseError("bad variable list", lineno, 1)
            elif key == "order":
                if value not in ("lex", "deglex", "degrevlex"):
                    raise ParseError("unknown order %r" % value, lineno, 1)
                order_name = value
            else:
                if value not in ("janet", "pommaret", "lexinduced"):
                    raise ParseError("unknown division %r" % value, lineno, 1)
                division = value
            continue
        if names is None:
            raise ParseError("polynomial before a vars: header", lineno, 1)
        if order is None:
            order = Order(order_name)
        p = parse_polynomial(line, names, order, lineno)
        if not p:
            raise ParseError("zero polynomial", lineno, 1)
        polys.append(p)
    if names is None:
        raise ParseError("missing vars: header", 1, 1)
    if not polys:
        raise ParseError("empty system", 1, 1)
    return polys, names, {"order": order_name, "division": division}


def render_system(polys, names, order_name, division=None):
    lines = ["vars: %s" % " ".join(names), "order: %s" % order_name]
    if division:
        lines.append("division: %s" % division)
    lines.extend(poly_str(p, names) for p in polys)
    return "\n".join(lines) + "\n"


def gen_benchmark(name, k, order=None):
    """Deterministic benchmark systems.

    cyclic-k: the k cyclic symmetric sums in k variables, the last one
    being x1*...*xk - 1.  katsura-k: the standard quadratic system in
    k+1 variables u0..uk.  Returns (polynomials, variable names).
    """
    if order is None:
        order = Order(DEFAULT_ORDER)
    if name == "cyclic":
        if k < 2:
            raise ValueError("cyclic-k needs k >= 2")
        n = k
        names = ["x%d" % (i + 1) for i in range(n)]
        polys = []
        for d in range(1, k):
            acc = {}
            for start in range(k):
                exps = [0] * n
                for j in range(d):
                    exps[(start + j) % k] += 1
                key = tuple(exps)
                acc[key] = acc.get(key, 0) + 1
            polys.append(make_poly(acc.items(), order))
        top = tuple([1] * n)
        polys.append(make_poly([(top, 1), (mono_one(n), -1)], order))
        return polys, names
    if name == "katsura":
        if k < 2:
            raise ValueError("katsura-k needs k >= 2")
        n = k + 1
        names = ["u%d" % i for i in range(n)]

        def var(i):
            return tuple(1 if j == i else 0 for j in range(n))

        polys = []
        for m in range(k):
            acc = {}
            for i in range(-k, k + 1):
                j = m - i
                if abs(j) > k:
                    continue
                key = tuple(
                    a + b for a, b in zip(var(abs(i)), var(abs(j)))
                )
                acc[key] = acc.get(key, 0) + 1
            acc[var(m)] = acc.get(var(m), 0) - 1
            polys.append(make_poly(acc.items(), order))
        acc = {var(0): 1, mono_one(n): -1}
        for i in range(1, k + 1):
            acc[var(i)] = acc.get(var(i), 0) + 2
        polys.append(make_poly(acc.items(), order))
        return polys, names
    raise ValueError("unknown benchmark %r" % (name,))
