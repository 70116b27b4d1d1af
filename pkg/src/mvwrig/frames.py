"""P-filters and their frame.

A filter is a nonempty upward-closed, product-closed subset; a P-filter
additionally swallows x whenever some finite dotted sum b1.x + .. + bm.x
belongs to it.  The dotted sums of x form a finite set here (the sum
closure of the multiples of x), which turns the existential in the
P-filter clause into a finite membership test.

The collection of all P-filters, ordered by inclusion, is a frame: meets
are intersections, joins are generated P-filters, and binary meets
distribute over arbitrary (here: finite) joins.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ideals, spectrum
from .core import FiniteMvwRig
from .errors import (
    EmptySeed,
    GateNotMet,
    MvwError,
    NotACover,
    NotCommutative,
    SizeBound,
)

#: P-filter enumeration is exponential in the carrier; keep it desk-scale.
DEFAULT_FRAME_BOUND = 16


@dataclass(frozen=True)
class PFilter:
    rig: FiniteMvwRig
    members: frozenset

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def display(self) -> str:
        return ideals.format_subset(self.rig, self.members)


def _require_product(rig):
    if rig.mul_table is None:
        raise GateNotMet("P-filters need a product")


def dotsum_closure(rig: FiniteMvwRig, x: int) -> frozenset:
    """All finite sums b1.x + .. + bm.x: the sum closure of the multiples
    of x.  Exact in a finite carrier."""
    _require_product(rig)
    memo = rig.__dict__.setdefault("_dotsum_memo", {})
    if x in memo:
        return memo[x]
    out = {rig.mul(b, rig._check(x)) for b in rig.elements()}
    frontier = set(out)
    while frontier:
        fresh = set()
        for p in frontier:
            for q in out:
                for r in (rig.add(p, q), rig.add(q, p)):
                    if r not in out:
                        fresh.add(r)
        out |= fresh
        frontier = fresh
    memo[x] = frozenset(out)
    return memo[x]


def is_filter(rig: FiniteMvwRig, members):
    _require_product(rig)
    s = set(members)
    if not s:
        return False, ("nonempty", ())
    for a in s:
        for b in rig.elements():
            if rig.leq(a, b) and b not in s:
                return False, ("upward", (a, b))
    for a in s:
        for b in s:
            if rig.mul(a, b) not in s:
                return False, ("product", (a, b))
    return True, None


def is_pfilter(rig: FiniteMvwRig, members):
    """Filter clauses plus the dotted-sum absorption clause."""
    ok, witness = is_filter(rig, members)
    if not ok:
        return ok, witness
    s = set(members)
    for x in rig.elements():
        if x in s:
            continue
        hit = dotsum_closure(rig, x) & s
        if hit:
            return False, ("dotted-sum", (x, min(hit)))
    return True, None


def _products_closure(rig, seed):
    """All products of finitely many seed elements (length >= 1)."""
    out = set(seed)
    frontier = set(seed)
    while frontier:
        fresh = set()
        for p in frontier:
            for s in seed:
                for r in (rig.mul(p, s), rig.mul(s, p)):
                    if r not in out:
                        fresh.add(r)
        out |= fresh
        frontier = fresh
    return out


def pfilter_generated(rig: FiniteMvwRig, seed) -> PFilter:
    """Least P-filter containing the seed, by forced closure: every step
    adds only elements that any P-filter containing the current set must
    hold, so the fixpoint is least.  Works for noncommutative products
    too; for commutative ones it agrees with pfilter_by_formula."""
    _require_product(rig)
    seed = {rig._check(a) for a in seed}
    if not seed:
        raise EmptySeed("P-filters are nonempty; seed must be too")
    members = set(seed)
    while True:
        fresh = set()
        for a in members:
            fresh.update(b for b in rig.elements()
                         if rig.leq(a, b) and b not in members)
            fresh.update(rig.mul(a, b) for b in members)
        for x in rig.elements():
            if x not in members and dotsum_closure(rig, x) & members:
                fresh.add(x)
        fresh -= members
        if not fresh:
            break
        members |= fresh
    pf = PFilter(rig, frozenset(members))
    ok, witness = is_pfilter(rig, pf.members)
    if not ok:
        raise MvwError(f"generated set fails a P-filter clause: {witness}")
    return pf


def pfilter_by_formula(rig: FiniteMvwRig, seed) -> frozenset:
    """The dotted-sum description of the generated P-filter: x belongs iff
    some product of seed elements sits below some dotted sum of x.  Equals
    the generated P-filter on commutative structures (the law suite checks
    this); on noncommutative ones it can fail product closure."""
    _require_product(rig)
    seed = {rig._check(a) for a in seed}
    if not seed:
        raise EmptySeed("P-filters are nonempty; seed must be too")
    prods = _products_closure(rig, seed)
    members = set()
    for x in rig.elements():
        sums = dotsum_closure(rig, x)
        if any(rig.leq(p, d) for p in prods for d in sums):
            members.add(x)
    return frozenset(members)


def principal_pfilter(rig: FiniteMvwRig, a: int) -> PFilter:
    """The least P-filter containing a single element."""
    return pfilter_generated(rig, {a})


def pfilter_meet(f: PFilter, g: PFilter) -> PFilter:
    if f.rig is not g.rig:
        raise ValueError("filters live on different structures")
    meet = PFilter(f.rig, f.members & g.members)
    ok, witness = is_pfilter(f.rig, meet.members)
    if not ok:
        raise MvwError(f"intersection fails a P-filter clause: {witness}")
    return meet


def pfilter_join(f: PFilter, g: PFilter) -> PFilter:
    if f.rig is not g.rig:
        raise ValueError("filters live on different structures")
    return pfilter_generated(f.rig, f.members | g.members)


def _upsets(rig, cap=200000):
    """All upward-closed subsets: unions of principal up-sets."""
    principal = {frozenset(b for b in rig.elements() if rig.leq(a, b))
                 for a in rig.elements()}
    out = {frozenset()} | principal
    frontier = set(out)
    while frontier:
        fresh = set()
        for u in frontier:
            for p in principal:
                w = u | p
                if w not in out and w not in fresh:
                    fresh.add(w)
        if len(out) + len(fresh) > cap:
            raise SizeBound("too many upward-closed subsets")
        out |= fresh
        frontier = fresh
    return out


def all_pfilters(rig: FiniteMvwRig, bound: int = DEFAULT_FRAME_BOUND):
    """Every P-filter, found by scanning upward-closed candidates and
    keeping those that satisfy the product and dotted-sum clauses."""
    _require_product(rig)
    if rig.size > bound:
        raise SizeBound(f"carrier of {rig.size} exceeds frame bound {bound}")
    dotsums = {x: dotsum_closure(rig, x) for x in rig.elements()}
    out = []
    for cand in _upsets(rig):
        if not cand:
            continue
        if any(rig.mul(a, b) not in cand for a in cand for b in cand):
            continue
        if any(x not in cand and (dotsums[x] & cand) for x in rig.elements()):
            continue
        out.append(cand)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass
class FrameLA:
    rig: FiniteMvwRig
    pfilters: tuple          # frozensets, canonically sorted
    join_table: tuple        # index x index -> index
    meet_table: tuple
    bottom: int              # principal filter of the top element
    top: int                 # the whole carrier

    def index_of(self, members) -> int:
        return self.pfilters.index(frozenset(members))

    def join_of(self, indices) -> int:
        acc = self.bottom
        for i in indices:
            acc = self.join_table[acc][i]
        return acc

    def leq(self, i: int, j: int) -> bool:
        return self.pfilters[i] <= self.pfilters[j]

    def hasse_edges(self):
        return spectrum.covering_edges(list(self.pfilters))


def frame(rig: FiniteMvwRig, bound: int = DEFAULT_FRAME_BOUND) -> FrameLA:
    """The frame of all P-filters with materialized join and meet tables;
    binary-meet distributivity over joins of principal filters is verified
    by the locale law suite."""
    filters = all_pfilters(rig, bound=bound)
    index = {s: i for i, s in enumerate(filters)}
    k = len(filters)
    join = [[0] * k for _ in range(k)]
    meet = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            join[i][j] = index[pfilter_generated(rig, filters[i] | filters[j]).members]
            inter = filters[i] & filters[j]
            if inter not in index:
                raise MvwError("intersection of P-filters is not a P-filter")
            meet[i][j] = index[inter]
    return FrameLA(rig=rig, pfilters=tuple(filters),
                   join_table=tuple(tuple(r) for r in join),
                   meet_table=tuple(tuple(r) for r in meet),
                   bottom=index[principal_pfilter(rig, rig.u).members],
                   top=index[frozenset(rig.elements())])


@dataclass
class ThetaMap:
    space: spectrum.SpecSpace
    frame: FrameLA
    open_to_filter: tuple    # open index -> frame index


def theta(rig: FiniteMvwRig, space=None, fr=None, verify=True) -> ThetaMap:
    """The lattice isomorphism from the open sets of the spectrum to the
    frame of P-filters, sending a basic open to the principal P-filter of
    its element and unions to joins."""
    if rig.mul_table is None or rig.unit is None:
        raise GateNotMet("the open-to-filter map needs a product and a unit")
    if not rig.commutative:
        raise NotCommutative(f"{rig.name} is not commutative")
    space = space if space is not None else spectrum.spec(rig)
    fr = fr if fr is not None else frame(rig)
    principal_idx = {a: fr.index_of(principal_pfilter(rig, a).members)
                     for a in rig.elements()}

    mapping = []
    for u in space.opens:
        family = [a for a in rig.elements() if space.base[a] <= u]
        mapping.append(fr.join_of(principal_idx[a] for a in family))
    tm = ThetaMap(space=space, frame=fr, open_to_filter=tuple(mapping))
    if verify:
        _verify_theta(rig, tm, principal_idx)
    return tm


def _verify_theta(rig, tm, principal_idx):
    space, fr = tm.space, tm.frame
    open_index = {o: i for i, o in enumerate(space.opens)}

    # well defined: every way of presenting an open as a union of basic
    # opens yields the same join (exhaustive over element subsets)
    import itertools
    for rset in itertools.chain.from_iterable(
            itertools.combinations(range(rig.size), k) for k in range(rig.size + 1)):
        u = frozenset().union(*(space.base[a] for a in rset)) if rset else frozenset()
        expect = tm.open_to_filter[open_index[u]]
        if fr.join_of(principal_idx[a] for a in rset) != expect:
            raise MvwError(f"open map depends on the presentation {rset}")

    if sorted(set(tm.open_to_filter)) != list(range(len(fr.pfilters))):
        raise MvwError("open map is not a bijection onto the P-filters")
    for i, u in enumerate(space.opens):
        for j, w in enumerate(space.opens):
            fu, fw = tm.open_to_filter[i], tm.open_to_filter[j]
            if tm.open_to_filter[open_index[u | w]] != fr.join_table[fu][fw]:
                raise MvwError("open map does not preserve joins")
            if tm.open_to_filter[open_index[u & w]] != fr.meet_table[fu][fw]:
                raise MvwError("open map does not preserve meets")
            if (u <= w) != fr.leq(fu, fw):
                raise MvwError("open map does not preserve order")


def finite_subcover(rig: FiniteMvwRig, generators):
    """Given elements whose principal P-filters join to the whole carrier,
    return a finite (here: small) subfamily that already joins to it.

    The witness is a product of finitely many generators equal to 0; the
    subfamily is read off the product.  Raises NotACover when the join is
    proper.  Soundness is asserted; minimality is not.
    """
    _require_product(rig)
    gens = [rig._check(g) for g in generators]
    # the empty join is the principal filter of the top element; if that is
    # already everything, the empty subfamily is a sound subcover
    if principal_pfilter(rig, rig.u).members == frozenset(rig.elements()):
        return []
    parent = {}
    frontier = []
    for g in gens:
        if g not in parent:
            parent[g] = (None, g)
            frontier.append(g)
    found = 0 in parent
    while frontier and not found:
        fresh = []
        for v in frontier:
            for g in gens:
                w = rig.mul(v, g)
                if w not in parent:
                    parent[w] = (v, g)
                    fresh.append(w)
                    if w == 0:
                        found = True
        frontier = fresh
    if 0 not in parent:
        if not gens or pfilter_generated(rig, set(gens)).members != frozenset(rig.elements()):
            raise NotACover("the principal filters of the generators have a proper join")
        # commutative structures always yield a zero product here; without
        # commutativity the witness may be unavailable, and the (finite)
        # input family itself is a sound answer
        return list(dict.fromkeys(gens))
    used = set()
    node = 0
    while node is not None:
        prev, g = parent[node]
        used.add(g)
        node = prev
    sub = [g for g in dict.fromkeys(gens) if g in used]
    if pfilter_generated(rig, set(sub)).members != frozenset(rig.elements()):
        raise MvwError("extracted subfamily does not cover")
    return sub


def export_json_doc(fr: FrameLA) -> dict:
    return {
        "pfilters": [sorted(s) for s in fr.pfilters],
        "hasse": [list(e) for e in sorted(fr.hasse_edges())],
    }
