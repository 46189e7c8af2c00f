"""Binary search tree over a monomial set for Janet-divisor lookup.

Interior nodes carry (variable, degree): the left child continues the
same variable at a strictly higher degree, the right child fixes the
degree and moves to the next variable.  A subtree holding a single
monomial collapses to a bare leaf, so a query costs O(d + n) node
visits where d bounds the leaf degrees.  The root is always the
(x1, 0) node.

Shape is a function of the leaf set alone, so inserts and deletes in
any order produce the same tree; query behavior is cross-checked
against the linear-scan divisor search in the tests.
"""

from .monomials import mono_deg, mono_divides, mono_str


class _Node:
    __slots__ = ("var", "deg", "left", "right")

    def __init__(self, var, deg, left=None, right=None):
        self.var = var
        self.deg = deg
        self.left = left
        self.right = right


def _build(monos, v):
    # monos agree on all variables before v and are pairwise distinct
    if len(monos) == 1:
        return monos[0]
    groups = {}
    for u in monos:
        groups.setdefault(u[v], []).append(u)
    chain = None
    for d in sorted(groups, reverse=True):
        sub = _build(groups[d], v + 1)
        if chain is None and isinstance(sub, tuple):
            chain = sub
        else:
            chain = _Node(v, d, chain, sub)
    return chain


def _insert(sub, u, v):
    if sub is None:
        return u
    if isinstance(sub, tuple):
        if sub == u:
            raise ValueError("duplicate monomial %s" % (u,))
        return _build([sub, u], v)
    d = u[sub.var]
    if d == sub.deg:
        sub.right = _insert(sub.right, u, sub.var + 1)
    elif d < sub.deg:
        return _Node(sub.var, d, sub, u)
    else:
        sub.left = _insert(sub.left, u, sub.var)
    return sub


def _delete(sub, u, v):
    if sub is None:
        raise KeyError(u)
    if isinstance(sub, tuple):
        if sub != u:
            raise KeyError(u)
        return None
    d = u[sub.var]
    if d == sub.deg:
        sub.right = _delete(sub.right, u, sub.var + 1)
    elif d > sub.deg:
        sub.left = _delete(sub.left, u, sub.var)
    else:
        raise KeyError(u)
    if sub.right is None:
        return sub.left
    if sub.left is None and isinstance(sub.right, tuple):
        return sub.right
    return sub


class JanetTree:
    """Dynamic Janet-divisor index over monomials of one arity."""

    __slots__ = ("n", "root", "size")

    def __init__(self, n, monos=()):
        self.n = n
        self.root = None
        self.size = 0
        monos = list(monos)
        if len(set(monos)) != len(monos):
            raise ValueError("duplicate monomials in input")
        if monos:
            group0 = [u for u in monos if u[0] == 0]
            rest = [u for u in monos if u[0] > 0]
            self.root = _Node(
                0,
                0,
                _build(rest, 0) if rest else None,
                _build(group0, 1) if group0 else None,
            )
            self.size = len(monos)

    def __len__(self):
        return self.size

    def __contains__(self, u):
        node = self.root
        while node is not None:
            if isinstance(node, tuple):
                return node == u
            if u[node.var] == node.deg:
                node = node.right
            elif u[node.var] > node.deg:
                node = node.left
            else:
                return False
        return False

    def insert(self, u):
        if len(u) != self.n:
            raise ValueError("arity mismatch")
        if self.root is None:
            self.root = _Node(0, 0)
        if u[0] == 0:
            self.root.right = _insert(self.root.right, u, 1)
        else:
            self.root.left = _insert(self.root.left, u, 0)
        self.size += 1

    def delete(self, u):
        if self.root is None:
            raise KeyError(u)
        if u[0] == 0:
            self.root.right = _delete(self.root.right, u, 1)
        else:
            self.root.left = _delete(self.root.left, u, 0)
        self.size -= 1
        if self.root.left is None and self.root.right is None:
            self.root = None

    def query(self, w):
        """The unique Janet divisor of w among the leaves, or None."""
        return self.query_with_visits(w)[0]

    def query_with_visits(self, w):
        """Divisor search plus the number of nodes visited on the path.

        The walk never branches: at each node the query degree either
        matches the group (move right), exceeds a maximal group (move
        right by multiplicativity), climbs the left chain, or fails.
        """
        if len(w) != self.n:
            raise ValueError("arity mismatch")
        node = self.root
        visits = 0
        while node is not None:
            visits += 1
            if isinstance(node, tuple):
                return (node if mono_divides(node, w) else None), visits
            i = w[node.var]
            if i == node.deg:
                node = node.right
            elif i > node.deg:
                left = node.left
                if left is None:
                    node = node.right
                else:
                    dl = left.deg if isinstance(left, _Node) else left[node.var]
                    if dl <= i:
                        node = left
                    else:
                        return None, visits
            else:
                return None, visits
        return None, visits

    def members(self):
        out = []
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            if isinstance(node, tuple):
                out.append(node)
                continue
            if node.right is not None:
                stack.append(node.right)
            if node.left is not None:
                stack.append(node.left)
        return out

    def max_degree(self):
        return max((mono_deg(u) for u in self.members()), default=0)

    def dump(self, names=None):
        """Indented (variable, degree) rendering for debugging."""
        lines = []

        def walk(node, depth, tag):
            pad = "  " * depth
            if node is None:
                return
            if isinstance(node, tuple):
                lines.append("%s%s[%s]" % (pad, tag, mono_str(node, names)))
                return
            lines.append("%s%s(%d,%d)" % (pad, tag, node.var + 1, node.deg))
            walk(node.left, depth + 1, "L ")
            walk(node.right, depth + 1, "R ")

        walk(self.root, 0, "")
        return "\n".join(lines)
