"""Reference Buchberger algorithm used to cross-validate the involutive
engine.

Normal selection strategy (smallest lcm degree, then smallest lcm) with
the Gebauer-Moeller pair pruning, which realizes Buchberger's co-prime
and chain criteria.  Reduction here is deliberately written against the
polynomial primitives only and shares no code with the involutive
reducers, so the two routes stay independent checks of each other.
"""

from collections import namedtuple
from math import gcd

from .monomials import mono_div, mono_divides, mono_lcm, mono_mul
from .polynomial import normalize_primitive, poly_combine, poly_mul_mono, reduce_step

CriticalPair = namedtuple("CriticalPair", "i j lcm degree")


def s_polynomial(f, g, order):
    """Primitive representative of (lcm/lt f) f - (lcm/lt g) g."""
    if not f or not g:
        raise ValueError("s-polynomial of a zero polynomial")
    lcm = mono_lcm(f.lm, g.lm)
    uf = mono_div(lcm, f.lm)
    ug = mono_div(lcm, g.lm)
    d = gcd(f.lc, g.lc)
    return poly_combine(
        poly_mul_mono(f, uf), g.lc // d, poly_mul_mono(g, ug), -(f.lc // d), order
    )


def _head_nf(h, reductors, order):
    """Reduce the leading term against the first dividing reductor until
    the head is irreducible or h vanishes."""
    while h:
        m = h.lm
        for g in reductors:
            if mono_divides(g.lm, m):
                h = reduce_step(h, g, order, 0)
                break
        else:
            return h
    return h


def _full_nf(h, reductors, order):
    i = 0
    while h and i < len(h.terms):
        m = h.terms[i][0]
        for g in reductors:
            if mono_divides(g.lm, m):
                h = reduce_step(h, g, order, i)
                break
        else:
            i += 1
    return h


def autoreduce(G, order):
    """Interreduce a set: no term of any element stays divisible by
    another element's leading monomial.  The ideal is unchanged."""
    polys = [p for p in (normalize_primitive(g) for g in G) if p]
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            g = polys[i]
            if g is None:
                continue
            others = [p for j, p in enumerate(polys) if j != i and p is not None]
            h = _full_nf(g, others, order)
            if h != g:
                polys[i] = h if h else None
                changed = True
    return tuple(sorted((p for p in polys if p), key=lambda p: order.key(p.lm)))


def _update(polys, alive, pairs, ih, order):
    """Gebauer-Moeller update of the pair set for a new basis element."""
    mh = polys[ih].lm

    candidates = set(alive)
    kept = set()
    while candidates:
        ig = candidates.pop()
        lcm_hg = mono_lcm(mh, polys[ig].lm)

        def absorbed(ip):
            return mono_divides(mono_lcm(mh, polys[ip].lm), lcm_hg)

        if mono_mul(mh, polys[ig].lm) == lcm_hg or (
            not any(absorbed(ip) for ip in candidates)
            and not any(absorbed(pr.j) for pr in kept)
        ):
            kept.add(CriticalPair(ih, ig, lcm_hg, sum(lcm_hg)))

    # of the survivors, drop the co-prime ones (their s-polynomials reduce
    # to zero by Buchberger's first criterion)
    new_pairs = {
        pr for pr in kept if mono_mul(mh, polys[pr.j].lm) != pr.lcm
    }

    for pr in pairs:
        mi, mj = polys[pr.i].lm, polys[pr.j].lm
        if (
            not mono_divides(mh, pr.lcm)
            or mono_lcm(mi, mh) == pr.lcm
            or mono_lcm(mj, mh) == pr.lcm
        ):
            new_pairs.add(pr)

    new_alive = {ig for ig in alive if not mono_divides(mh, polys[ig].lm)}
    new_alive.add(ih)
    return new_alive, new_pairs


def buchberger_reduced_gb(F, order):
    """The unique primitive-normalized reduced Groebner basis of Id(F),
    returned sorted ascending by leading monomial."""
    start = [p for p in (normalize_primitive(f) for f in F) if p]
    if not start:
        return ()
    polys = list(autoreduce(start, order))
    alive = set()
    pairs = set()
    for ih in range(len(polys)):
        alive, pairs = _update(polys, alive, pairs, ih, order)

    def pair_key(pr):
        return (pr.degree, order.key(pr.lcm), pr.i, pr.j)

    while pairs:
        pr = min(pairs, key=pair_key)
        pairs.remove(pr)
        s = s_polynomial(polys[pr.i], polys[pr.j], order)
        reductors = [polys[k] for k in sorted(alive)]
        h = _head_nf(s, reductors, order)
        if h:
            polys.append(h)
            alive, pairs = _update(polys, alive, pairs, len(polys) - 1, order)

    # interreduce the minimal basis into the reduced one, smallest leading
    # monomial first so every tail meets only finished reductors
    minimal = sorted((polys[k] for k in alive), key=lambda p: order.key(p.lm))
    reduced = []
    for g in minimal:
        reduced.append(_full_nf(g, reduced, order))
    return tuple(reduced)


def is_groebner_basis(G, order):
    """Direct check: every s-polynomial of G reduces to zero."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if _full_nf(s_polynomial(G[i], G[j], order), G, order):
                return False
    return True
