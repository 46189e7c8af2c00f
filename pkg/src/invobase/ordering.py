"""Admissible monomial orders with fixed precedence x1 > x2 > ... > xn."""

ORDER_KINDS = ("lex", "deglex", "degrevlex")


class Order:
    """A monomial order given by its sort key.

    The key maps an exponent tuple to a tuple that compares the same way
    the order does, so monomials can be sorted with plain tuple comparison:

      lex        key(u) = u
      deglex     key(u) = (deg u, u)
      degrevlex  key(u) = (deg u, reversed negated u)

    Under degrevlex, of two monomials of equal degree the greater is the
    one with the smaller exponent in the last variable where they differ.
    """

    __slots__ = ("kind",)

    def __init__(self, kind):
        if kind not in ORDER_KINDS:
            raise ValueError("unknown order %r (expected one of %s)" % (kind, ", ".join(ORDER_KINDS)))
        self.kind = kind

    def key(self, u):
        if self.kind == "lex":
            return u
        if self.kind == "deglex":
            return (sum(u), u)
        return (sum(u), tuple(-e for e in reversed(u)))

    def compare(self, u, v):
        """cmp-style comparison: -1 if u < v, 0 if equal, +1 if u > v."""
        if len(u) != len(v):
            raise ValueError("arity mismatch: %d vs %d" % (len(u), len(v)))
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    def sorted(self, monos, reverse=False):
        return sorted(monos, key=self.key, reverse=reverse)

    def min(self, monos):
        return min(monos, key=self.key)

    def max(self, monos):
        return max(monos, key=self.key)

    def __repr__(self):
        return "Order(%r)" % self.kind

    def __eq__(self, other):
        return isinstance(other, Order) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)


LEX = Order("lex")
DEGLEX = Order("deglex")
DEGREVLEX = Order("degrevlex")


def order_compare(order, u, v):
    """Module-level alias for Order.compare."""
    return order.compare(u, v)
