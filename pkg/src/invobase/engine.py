"""Involutive-basis completion with ancestry triples and S-pair criteria.

Two drivers are provided.  The plain one recomputes every prolongation
from scratch and exists as the readable reference; the improved one
carries {polynomial, ancestor, used-variables} triples so repeated
prolongations are skipped, prunes redundant reductions with the four
involutive forms of Buchberger's criteria, and marks the reduced
Groebner basis inside the involutive basis for free: its members are
exactly the triples that are their own ancestor.

The head-reduction phase works on an immutable snapshot of the basis, so
it can be fanned out over worker lanes; results are merged back in a
fixed order and the outcome is bit-identical for any worker count.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import count

from .cones import BoundExceeded
from .division import (
    DIVISIONS,
    NOETHERIAN,
    compute_separation,
    find_all_involutive_divisors,
)
from .janet_tree import JanetTree
from .monomials import (
    mono_deg,
    mono_lcm,
    mono_mul,
    mono_proper_divides,
    mono_var,
)
from .normalform import inv_normal_form
from .ordering import Order
from .polynomial import (
    Poly,
    max_abs_coeff,
    normalize_primitive,
    poly_mul_mono,
    reduce_step,
)

CRITERIA = ("C1", "C2", "C3", "C4")
SELECTIONS = ("normal", "order", "fifo")


@dataclass
class EngineConfig:
    order: Order
    division: str = "janet"
    criteria: frozenset = frozenset(CRITERIA)
    partial_head_reduction: bool = False
    degree_bound: int = 0
    workers: int = 1
    output: str = "both"
    selection: str = "normal"

    def validate(self):
        if self.division not in DIVISIONS:
            raise ValueError("unknown division %r" % (self.division,))
        if self.output not in ("involutive", "groebner", "both"):
            raise ValueError("unknown output mode %r" % (self.output,))
        if self.selection not in SELECTIONS:
            raise ValueError("unknown selection strategy %r" % (self.selection,))
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.degree_bound < 0:
            raise ValueError("degree bound must be >= 0")
        if self.degree_bound == 0 and not NOETHERIAN[self.division]:
            raise ValueError(
                "division %r is not Noetherian: a positive degree bound is required"
                % (self.division,)
            )
        bad = set(self.criteria) - set(CRITERIA)
        if bad:
            raise ValueError("unknown criteria %s" % sorted(bad))


@dataclass
class CompletionStats:
    """Counters accumulated over one completion run.

    Coefficient sizes are tracked as the largest absolute value seen in
    the input, in any intermediate reduction result, and in the output
    basis; the swell factor compares intermediate to output size in
    64-bit words.  Criteria applications and ancestor pairs are counted
    at every head-reduction gate, so numbers are strategy-dependent.
    """

    criteria_hits: Counter = field(default_factory=Counter)
    prolongations_examined: int = 0
    head_reductions: int = 0
    tail_reductions: int = 0
    pair_counts: Counter = field(default_factory=Counter)
    prolongations_log: list = field(default_factory=list)
    max_input_coeff: int = 0
    max_intermediate_coeff: int = 0
    max_output_coeff: int = 0

    @property
    def reductions(self):
        return self.head_reductions + self.tail_reductions

    def _words(self, value):
        return -(-abs(value).bit_length() // 64) if value else 0

    @property
    def max_intermediate_digits(self):
        return len(str(self.max_intermediate_coeff)) if self.max_intermediate_coeff else 0

    @property
    def max_intermediate_words(self):
        return self._words(self.max_intermediate_coeff)

    @property
    def max_output_words(self):
        return self._words(self.max_output_coeff)

    @property
    def swell_factor(self):
        if not self.max_output_coeff:
            return None
        return self.max_intermediate_words / self.max_output_words

    def note_intermediate(self, value):
        if value > self.max_intermediate_coeff:
            self.max_intermediate_coeff = value

    def counters(self):
        """Flat (name, value) pairs for reports."""
        out = [("prolongations_examined", self.prolongations_examined)]
        for name in CRITERIA:
            out.append((name.lower() + "_hits", self.criteria_hits.get(name, 0)))
        out.extend(
            [
                ("head_reductions", self.head_reductions),
                ("tail_reductions", self.tail_reductions),
                ("max_input_coeff_digits", len(str(self.max_input_coeff)) if self.max_input_coeff else 0),
                ("max_intermediate_coeff_digits", self.max_intermediate_digits),
                ("max_output_coeff_digits", len(str(self.max_output_coeff)) if self.max_output_coeff else 0),
                ("max_intermediate_coeff_words", self.max_intermediate_words),
                ("max_output_coeff_words", self.max_output_words),
                ("swell_factor", self.swell_factor),
            ]
        )
        return out


class Triple:
    """Completion record: a polynomial, its ancestor, and the
    non-multiplicative variables already prolonged."""

    __slots__ = ("pol", "anc", "nmp", "parent", "idx", "origin", "examined")

    def __init__(self, pol, anc, nmp, idx, parent=None, origin=None):
        self.pol = pol
        self.anc = anc
        self.nmp = set(nmp)
        self.idx = idx
        self.parent = parent
        self.origin = origin  # (parent leading monomial, variable) for prolongations
        self.examined = False

    @property
    def is_own_ancestor(self):
        return self.pol == self.anc

    def __repr__(self):
        return "Triple(%r, idx=%d)" % (self.pol, self.idx)


class TripleStore:
    """The intermediate basis: one triple per leading monomial, kept
    involutively autoreduced, with divisor lookup and separations
    recomputed per snapshot (a Janet tree backs the Janet case)."""

    def __init__(self, order, division, n):
        self.order = order
        self.division = division
        self.n = n
        self.items = []
        self.by_lm = {}
        self._tree = JanetTree(n) if division == "janet" else None
        self._sep = None
        self._pos = None

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def lms(self):
        return self.by_lm.keys()

    @property
    def separation(self):
        if self._sep is None:
            self._sep = compute_separation(self.division, self.by_lm.keys())
        return self._sep

    def index(self, t):
        if self._pos is None:
            self._pos = {id(q): i for i, q in enumerate(self.items)}
        return self._pos.get(id(t))

    def insert(self, t):
        lm = t.pol.lm
        if lm in self.by_lm:
            raise AssertionError("duplicate leading monomial %s in basis" % (lm,))
        if self.divisor(lm) is not None:
            raise AssertionError("inserted head %s is involutively reducible" % (lm,))
        self._repair_ancestry_on_insert(t)
        self.items.append(t)
        self.by_lm[lm] = t
        if self._tree is not None:
            self._tree.insert(lm)
        self._sep = None
        self._pos = None

    def remove(self, t):
        self.items.remove(t)
        del self.by_lm[t.pol.lm]
        if self._tree is not None:
            self._tree.delete(t.pol.lm)
        self._sep = None
        self._pos = None
        self._repair_ancestry_on_remove(t)

    def _anc_sort_key(self, t):
        return (t.anc.lm_deg, self.order.key(t.anc.lm), self.order.key(t.pol.lm))

    def _repair_ancestry_on_insert(self, p):
        # an element is its own ancestor exactly while no other basis head
        # properly divides its head; descendants inherit the ancestor of
        # the divisor of smallest ancestor degree
        divisors = [t for t in self.items if mono_proper_divides(t.pol.lm, p.pol.lm)]
        if divisors and p.is_own_ancestor:
            p.anc = min(divisors, key=self._anc_sort_key).anc
        for t in self.items:
            if t.is_own_ancestor and mono_proper_divides(p.pol.lm, t.pol.lm):
                t.anc = p.anc if not p.is_own_ancestor else p.pol

    def _repair_ancestry_on_remove(self, r):
        for t in self.items:
            if t.is_own_ancestor or not mono_proper_divides(r.pol.lm, t.pol.lm):
                continue
            divisors = [
                q for q in self.items if mono_proper_divides(q.pol.lm, t.pol.lm)
            ]
            if not divisors:
                t.anc = t.pol
            else:
                t.anc = min(divisors, key=self._anc_sort_key).anc

    def divisor(self, m):
        """The unique triple whose head involutively divides m, or None."""
        if not self.items:
            return None
        if self._tree is not None:
            hit = self._tree.query(m)
            return self.by_lm[hit] if hit is not None else None
        hits = find_all_involutive_divisors(self.separation, m)
        if len(hits) > 1:
            raise AssertionError("basis is not involutively autoreduced at %s" % (m,))
        return self.by_lm[hits[0]] if hits else None


class _HeadDelta:
    """Per-record outcome of one head-reduction, merged into the stats in
    a fixed order so worker laning cannot reorder accounting."""

    __slots__ = ("steps", "max_coeff", "pair_key", "criterion", "first_exam")

    def __init__(self):
        self.steps = 0
        self.max_coeff = 0
        self.pair_key = None
        self.criterion = None
        self.first_exam = False

    def note_step(self, a, b, u, g, strip, result):
        self.steps += 1
        c = max_abs_coeff(result)
        if c > self.max_coeff:
            self.max_coeff = c


def _criteria_fired(p, g, store, enabled):
    lmp = p.pol.lm
    anc_p = p.anc.lm
    anc_g = g.anc.lm

    if "C1" in enabled and mono_mul(anc_p, anc_g) == lmp:
        return "C1"
    if "C2" in enabled and mono_proper_divides(mono_lcm(anc_p, anc_g), lmp):
        return "C2"
    if "C3" in enabled:
        big = mono_lcm(anc_p, anc_g)
        for t in store:
            lmt = t.pol.lm
            if mono_proper_divides(mono_lcm(lmt, anc_p), big) and mono_proper_divides(
                mono_lcm(lmt, anc_g), big
            ):
                return "C3"
    if "C4" in enabled and p.parent is not None:
        f_pos = store.index(p.parent)
        if f_pos is not None:
            sep = store.separation
            for t in store:
                t_pos = store.index(t)
                if t_pos >= f_pos:
                    continue
                lmt = t.pol.lm
                mask = sep.masks[lmt]
                for x in range(store.n):
                    if mask >> x & 1:
                        continue
                    if mono_mul(lmt, mono_var(x, store.n)) == lmp and mono_proper_divides(
                        mono_lcm(anc_p, t.anc.lm), lmp
                    ):
                        return "C4"
    return None


def criteria_check(p, g, store, enabled=frozenset(CRITERIA), stats=None):
    """Involutive forms of the Buchberger criteria, checked in order
    C1, C2, C3, C4; true means the pending S-polynomial is redundant."""
    fired = _criteria_fired(p, g, store, enabled)
    if fired and stats is not None:
        stats.criteria_hits[fired] += 1
    return fired is not None


def head_normal_form(p, store, cfg, delta=None):
    """Involutive head normal form of a queue record against the basis.

    When the head is reducible and differs from the ancestor's head, the
    record is an S-polynomial in disguise and the criteria are consulted
    once with the unique reductor; a hit stands for reduction to zero.
    Otherwise the head is reduced until irreducible or the polynomial
    vanishes.
    """
    if delta is None:
        delta = _HeadDelta()
    h = p.pol
    g = store.divisor(h.lm)
    if g is None:
        return h
    if h.lm != p.anc.lm:
        delta.pair_key = frozenset((p.anc.lm, g.anc.lm))
        fired = _criteria_fired(p, g, store, cfg.criteria)
        if fired:
            delta.criterion = fired
            return Poly()
    while True:
        h = reduce_step(h, g.pol, cfg.order, 0, delta)
        if not h:
            return h
        g = store.divisor(h.lm)
        if g is None:
            return h


def select_from_queue(Q, order, selection="normal"):
    """Pick the next record: its head must have no proper divisor among
    the queue heads; ties resolved by total degree, order, then age."""
    if not Q:
        raise ValueError("empty queue")
    lms = [r.pol.lm for r in Q]
    eligible = [
        r
        for r in Q
        if not any(mono_proper_divides(m, r.pol.lm) for m in lms if m != r.pol.lm)
    ]
    if selection == "normal":
        keyf = lambda r: (r.pol.lm_deg, order.key(r.pol.lm), r.idx)
    elif selection == "order":
        keyf = lambda r: (order.key(r.pol.lm), r.idx)
    else:
        keyf = lambda r: r.idx
    return min(eligible, key=keyf)


def head_reduce(Q, store, cfg, stats=None, seq=None):
    """Head-reduce the queue against the basis snapshot.

    Records that reduce to zero disappear, and with them every queued
    descendant of a vanished self-ancestored record; records whose head
    survives unchanged are kept as they are; a changed head starts a
    fresh self-ancestored record.  In partial mode only the records of
    minimal total degree are processed.  The returned queue is sorted by
    (degree, order, age) and is identical for any worker count.
    """
    if stats is None:
        stats = CompletionStats()
    if seq is None:
        seq = count()
    if not Q:
        return []
    if cfg.partial_head_reduction:
        min_deg = min(r.pol.lm_deg for r in Q)
        rest_lms = [r.pol.lm for r in Q if r.pol.lm_deg > min_deg]
        targets = [
            i
            for i, r in enumerate(Q)
            if r.pol.lm_deg == min_deg
            and not any(mono_proper_divides(m, r.pol.lm) for m in rest_lms)
        ]
    else:
        targets = list(range(len(Q)))

    records = [Q[i] for i in targets]
    deltas = [_HeadDelta() for _ in records]

    def job(k):
        return head_normal_form(records[k], store, cfg, deltas[k])

    if cfg.workers > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(job, range(len(records))))
    else:
        results = [job(k) for k in range(len(records))]

    by_pos = dict(zip(targets, zip(results, deltas)))
    zeroed = set()
    merged = []
    for i, rec in enumerate(Q):
        if i not in by_pos:
            merged.append(rec)
            continue
        h, delta = by_pos[i]
        stats.head_reductions += delta.steps
        stats.note_intermediate(delta.max_coeff)
        if delta.pair_key is not None:
            stats.pair_counts[delta.pair_key] += 1
        if delta.criterion is not None:
            stats.criteria_hits[delta.criterion] += 1
        if rec.origin is not None and not rec.examined:
            rec.examined = True
            stats.prolongations_examined += 1
            stats.prolongations_log.append(rec.origin)
        if not h:
            if rec.pol.lm == rec.anc.lm:
                zeroed.add(rec.pol)
            continue
        if h.lm == rec.pol.lm:
            merged.append(rec)
        else:
            merged.append(Triple(h, h, (), next(seq)))
    if zeroed:
        merged = [r for r in merged if r.anc not in zeroed]
    # one record per polynomial: of several carriers keep the one whose
    # ancestor has the smallest leading monomial, which is what being an
    # ancestor means
    best = {}
    for r in merged:
        old = best.get(r.pol)
        if old is None or _anc_key(r, cfg.order) < _anc_key(old, cfg.order):
            best[r.pol] = r
    return sorted(
        best.values(), key=lambda r: (r.pol.lm_deg, cfg.order.key(r.pol.lm), r.idx)
    )


def _anc_key(rec, order):
    return (rec.anc.lm_deg, order.key(rec.anc.lm), rec.idx)


class _TailTrace:
    __slots__ = ("stats",)

    def __init__(self, stats):
        self.stats = stats

    def note_step(self, a, b, u, g, strip, result):
        self.stats.tail_reductions += 1
        self.stats.note_intermediate(max_abs_coeff(result))


def _tail_nf(pol, store, cfg, stats):
    trace = _TailTrace(stats)
    h = pol
    i = 1
    while h and i < len(h.terms):
        g = store.divisor(h.terms[i][0])
        if g is None:
            i += 1
        else:
            h = reduce_step(h, g.pol, cfg.order, i, trace)
    return h


def _prepare_input(F):
    polys = []
    seen = set()
    for f in F:
        p = normalize_primitive(f)
        if not p or p in seen:
            continue
        seen.add(p)
        polys.append(p)
    if not polys:
        raise ValueError("input system contains no nonzero polynomials")
    n = len(polys[0].lm)
    if any(len(p.lm) != n for p in polys):
        raise ValueError("arity mismatch in input system")
    return polys, n


def _initial_choice(polys, order, selection):
    lms = [p.lm for p in polys]
    eligible = [
        p for p in polys if not any(mono_proper_divides(m, p.lm) for m in lms if m != p.lm)
    ]
    if selection == "order":
        return min(eligible, key=lambda p: order.key(p.lm))
    return eligible[0]


def _check_bound(lm_deg, bound, lm):
    if bound and lm_deg + 1 > bound:
        raise BoundExceeded(lm_deg + 1, lm)


def _generate_prolongations(store, Q, qkeys, cfg, seq):
    """Queue every not-yet-examined non-multiplicative prolongation.

    The used-variable sets are re-intersected with the current
    non-multiplicative sets first, so variables that turned
    multiplicative and back are examined again.
    """
    sep = store.separation
    added = 0
    for q in store:
        nm = sep.nonmultiplicative(q.pol.lm)
        if nm - q.nmp:
            q.nmp &= nm
        for x in sorted(nm - q.nmp):
            _check_bound(q.pol.lm_deg, cfg.degree_bound, q.pol.lm)
            prol = poly_mul_mono(q.pol, mono_var(x, store.n))
            rec = Triple(prol, q.anc, (), next(seq), parent=q, origin=(q.pol.lm, x))
            q.nmp.add(x)
            key = (rec.pol, rec.anc)
            if key in qkeys:
                continue
            qkeys.add(key)
            Q.append(rec)
            added += 1
    return added


def extract_groebner(store, order):
    """The self-ancestored part of a finished basis: the reduced
    Groebner basis of the ideal."""
    items = store.items if isinstance(store, TripleStore) else list(store)
    picked = [t.pol for t in items if t.pol.lm == t.anc.lm]
    return tuple(sorted(picked, key=lambda p: order.key(p.lm)))


def involutive_basis_v2(F, cfg):
    """Completion with triples and criteria.

    Returns a dict with the minimal involutive basis, the reduced
    Groebner basis sitting inside it, and the run statistics.  Raises
    BoundExceeded when a prolongation leaves the configured degree bound.
    """
    cfg.validate()
    polys, n = _prepare_input(F)
    order = cfg.order
    stats = CompletionStats()
    stats.max_input_coeff = max(max_abs_coeff(p) for p in polys)
    stats.note_intermediate(stats.max_input_coeff)

    seq = count()
    store = TripleStore(order, cfg.division, n)
    first = _initial_choice(polys, order, cfg.selection)
    store.insert(Triple(first, first, (), next(seq)))
    Q = []
    qkeys = set()
    for p in polys:
        if p is not first:
            rec = Triple(p, p, (), next(seq))
            qkeys.add((rec.pol, rec.anc))
            Q.append(rec)
    Q = head_reduce(Q, store, cfg, stats, seq)

    while True:
        if not Q:
            qkeys = set()
            if _generate_prolongations(store, Q, qkeys, cfg, seq) == 0:
                break
            Q = head_reduce(Q, store, cfg, stats, seq)
            continue
        p = select_from_queue(Q, order, cfg.selection)
        Q.remove(p)
        g = store.divisor(p.pol.lm)
        if g is not None:
            # partial head reduction can leave stale heads in the queue
            delta = _HeadDelta()
            h = head_normal_form(p, store, cfg, delta)
            stats.head_reductions += delta.steps
            stats.note_intermediate(delta.max_coeff)
            if delta.pair_key is not None:
                stats.pair_counts[delta.pair_key] += 1
            if delta.criterion is not None:
                stats.criteria_hits[delta.criterion] += 1
            if p.origin is not None and not p.examined:
                p.examined = True
                stats.prolongations_examined += 1
                stats.prolongations_log.append(p.origin)
            if h:
                Q.append(Triple(h, h, (), next(seq)))
            continue
        if p.is_own_ancestor:
            displaced = [t for t in store if mono_proper_divides(p.pol.lm, t.pol.lm)]
            for t in displaced:
                store.remove(t)
                t.idx = next(seq)
                Q.append(t)
        h = _tail_nf(p.pol, store, cfg, stats)
        if p.is_own_ancestor:
            p.anc = h
        p.pol = h
        store.insert(p)
        _normalize_tails(store, cfg, stats)
        qkeys = {(r.pol, r.anc) for r in Q}
        _generate_prolongations(store, Q, qkeys, cfg, seq)
        Q = head_reduce(Q, store, cfg, stats, seq)

    _normalize_tails(store, cfg, stats)
    basis = tuple(sorted((t.pol for t in store), key=lambda p: order.key(p.lm)))
    groebner = extract_groebner(store, order)
    stats.max_output_coeff = max(max_abs_coeff(p) for p in basis)
    stats.note_intermediate(stats.max_output_coeff)
    return {"basis": basis, "groebner": groebner, "stats": stats}


def _normalize_tails(store, cfg, stats):
    """Restore full autoreduction of the basis: tail-normalize every
    member, smallest head first, until nothing changes.  Heads are
    untouched, so the structure, separations and ancestry all survive;
    only the stored representatives get interreduced."""
    changed = True
    while changed:
        changed = False
        for t in sorted(store, key=lambda t: cfg.order.key(t.pol.lm)):
            new = _tail_nf(t.pol, store, cfg, stats)
            if new != t.pol:
                if t.anc == t.pol:
                    t.anc = new
                t.pol = new
                changed = True


def involutive_basis_v1(
    F, order, division="janet", degree_bound=0, selection="order", snapshot=None
):
    """Plain completion: no triples, no criteria, repeated prolongations
    recomputed every round.

    The snapshot callback, when given, receives the intermediate basis
    (with each element's non-multiplicative variables) and the queue at
    initialization and after every insertion round.
    """
    if division not in DIVISIONS:
        raise ValueError("unknown division %r" % (division,))
    if degree_bound == 0 and not NOETHERIAN[division]:
        raise ValueError(
            "division %r is not Noetherian: a positive degree bound is required"
            % (division,)
        )
    polys, n = _prepare_input(F)

    def nm_of(lms, u):
        return compute_separation(division, lms).nonmultiplicative(u)

    def emit(G, Q):
        if snapshot is not None:
            lms = [g.lm for g in G]
            snapshot(
                [(g, nm_of(lms, g.lm)) for g in G],
                list(Q),
            )

    first = _initial_choice(polys, order, selection)
    G = [first]
    Q = [p for p in polys if p is not first]
    emit(G, Q)

    while True:
        h = Poly()
        while Q and not h:
            lms = [q.lm for q in Q]
            eligible = [
                q
                for q in Q
                if not any(mono_proper_divides(m, q.lm) for m in lms if m != q.lm)
            ]
            if selection == "order":
                p = min(eligible, key=lambda q: order.key(q.lm))
            elif selection == "normal":
                p = min(eligible, key=lambda q: (q.lm_deg, order.key(q.lm)))
            else:
                p = eligible[0]
            Q.remove(p)
            h = inv_normal_form(p, G, order, division)
        if h:
            kept = []
            for g in G:
                if mono_proper_divides(h.lm, g.lm):
                    if g not in Q:
                        Q.append(g)
                else:
                    kept.append(g)
            G = kept
            G.append(h)
            sep = compute_separation(division, [g.lm for g in G])
            for g in G:
                for x in sorted(sep.nonmultiplicative(g.lm)):
                    _check_bound(g.lm_deg, degree_bound, g.lm)
                    prol = poly_mul_mono(g, mono_var(x, n))
                    if prol not in Q:
                        Q.append(prol)
        emit(G, Q)
        if not Q:
            # guard for divisions where a lone generator is not complete:
            # no insertion ever ran, so prolongations were never queued
            pending = []
            sep = compute_separation(division, [g.lm for g in G])
            for g in G:
                for x in sorted(sep.nonmultiplicative(g.lm)):
                    _check_bound(g.lm_deg, degree_bound, g.lm)
                    prol = poly_mul_mono(g, mono_var(x, n))
                    if inv_normal_form(prol, G, order, division):
                        pending.append(prol)
            if not pending:
                break
            Q.extend(pending)
    return tuple(sorted(G, key=lambda p: order.key(p.lm)))
