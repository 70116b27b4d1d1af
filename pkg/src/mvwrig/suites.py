"""Named law suites.

Each check verifies one structural law exhaustively on a given structure
and is addressable from the command line, giving a law-to-test
traceability table.  Checks whose hypothesis fails (no product, not
commutative, no unit, carrier too large for an exponential scan) report
SKIPPED rather than PASS.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import core, frames, ideals, spectrum
from .errors import MvwError, SizeBound

NARY_SIZE_LIMIT = 6        # extra indices make the scan size^(2n)
PARTITION_SIZE_LIMIT = 8   # Bell numbers grow fast
SUBSET_SIZE_LIMIT = 10     # 2^size subset scans
BRUTE_PFILTER_LIMIT = 12   # independent 2^size P-filter oracle


@dataclass
class CheckResult:
    suite: str
    name: str
    status: str              # PASS | FAIL | SKIPPED
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail and self.status != "PASS" else ""
        return f"[{self.suite}] {self.name} {self.status}{tail}"


class _Skip(Exception):
    pass


class _Ctx:
    """Shared lazily-computed objects for one structure."""

    def __init__(self, rig, frame_bound=frames.DEFAULT_FRAME_BOUND):
        self.rig = rig
        self.frame_bound = frame_bound
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def ideal_list(self):
        return self._get("ideals", lambda: ideals.enumerate_ideals(self.rig))

    @property
    def proper_primes(self):
        return self._get("primes", lambda: ideals.prime_ideals(self.rig))

    @property
    def space(self):
        return self._get("space", lambda: spectrum.spec(self.rig))

    @property
    def frame(self):
        return self._get("frame", lambda: frames.frame(self.rig, bound=self.frame_bound))

    @property
    def principal_filters(self):
        return self._get("principal",
                         lambda: {a: frames.principal_pfilter(self.rig, a).members
                                  for a in self.rig.elements()})


def _need_product(rig):
    if rig.mul_table is None:
        raise _Skip("no product")


def _need_commutative(rig):
    _need_product(rig)
    if not rig.commutative:
        raise _Skip("not commutative")


def _need_unit(rig):
    _need_product(rig)
    if rig.unit is None:
        raise _Skip("no unitary element")


def _fmt(rig, tpl):
    return tpl


# -- core laws ---------------------------------------------------------------

def _check_mv_axioms(ctx):
    report = core.check_mv(ctx.rig)
    if not report.passed:
        bad = ", ".join(f"{a} at {report.witnesses(a)[:2]}" for a in report.failed_axioms())
        return f"failing: {bad}"


def _check_mvw_axioms(ctx):
    _need_product(ctx.rig)
    report = core.check_mvw(ctx.rig)
    if not report.passed:
        bad = ", ".join(f"{a} at {report.witnesses(a)[:2]}" for a in report.failed_axioms())
        return f"failing: {bad}"


def _check_order_lattice(ctx):
    r = ctx.rig
    n = r.size
    leq = r.leq_table
    if not leq.diagonal().all():
        return "order is not reflexive"
    reach = leq.astype(np.int64)
    if ((reach @ reach > 0) & ~leq).any():
        return "order is not transitive"
    if not (leq[0, :].all() and leq[:, r.u].all()):
        return "0 is not bottom or u is not top"
    idx = np.arange(n)
    if not (leq[idx[:, None], r.join_table].all()
            and leq[idx[None, :], r.join_table].all()):
        return "join is not an upper bound"
    if not (leq[r.meet_table, idx[:, None]].all()
            and leq[r.meet_table, idx[None, :]].all()):
        return "meet is not a lower bound"
    for z in range(n):
        up = leq[:, z]
        both = up[:, None] & up[None, :]
        if (both & ~leq[r.join_table, z]).any():
            return f"join is not the least upper bound (against {z})"
        dn = leq[z, :]
        both = dn[:, None] & dn[None, :]
        if (both & ~leq[z, r.meet_table]).any():
            return f"meet is not the greatest lower bound (against {z})"


def _check_residuation(ctx):
    r = ctx.rig
    add, monus, leq = r.add_table, r.monus_table, r.leq_table
    for x in range(r.size):
        lhs = leq[x][add]               # [y, z] : x <= y + z
        rhs = leq[monus[x]][:, :].T     # [y, z] : x - z <= y
        if (lhs != rhs).any():
            y, z = map(int, np.argwhere(lhs != rhs)[0])
            return f"fails at ({x}, {y}, {z})"


def _check_monus_superadditive(ctx):
    r = ctx.rig
    add, monus, leq = r.add_table, r.monus_table, r.leq_table
    for x1 in range(r.size):
        for y1 in range(r.size):
            lhs = monus[add[x1][:, None], add[y1][None, :]]
            rhs = add[monus[x1, y1]][monus]
            if not leq[lhs, rhs].all():
                x2, y2 = map(int, np.argwhere(~leq[lhs, rhs])[0])
                return f"fails at x=({x1},{x2}) y=({y1},{y2})"


def _check_monus_superadditive_nary(ctx):
    r = ctx.rig
    if r.size > NARY_SIZE_LIMIT:
        raise _Skip(f"carrier {r.size} > {NARY_SIZE_LIMIT}")
    add, monus, leq = r.add_table, r.monus_table, r.leq_table
    for arity in (3, 4):
        vecs = np.array(list(itertools.product(range(r.size), repeat=arity)))
        sums = vecs[:, 0]
        for k in range(1, arity):
            sums = add[sums, vecs[:, k]]
        lhs = monus[sums[:, None], sums[None, :]]
        rhs = monus[vecs[:, None, 0], vecs[None, :, 0]]
        for k in range(1, arity):
            rhs = add[rhs, monus[vecs[:, None, k], vecs[None, :, k]]]
        if not leq[lhs, rhs].all():
            i, j = map(int, np.argwhere(~leq[lhs, rhs])[0])
            return f"{arity}-ary fails at x={tuple(vecs[i])} y={tuple(vecs[j])}"


def _check_product_monotone(ctx):
    r = ctx.rig
    _need_product(r)
    mul, leq = r.mul_table, r.leq_table
    for c in range(r.size):
        for vec in (mul[:, c], mul[c, :]):
            bad = leq & ~leq[np.ix_(vec, vec)]
            if bad.any():
                a, b = map(int, np.argwhere(bad)[0])
                return f"fails at a={a} b={b} c={c}"


def _check_product_join_bound(ctx):
    r = ctx.rig
    _need_product(r)
    mul, join, leq = r.mul_table, r.join_table, r.leq_table
    for a in range(r.size):
        for vec in (mul[a], mul[:, a]):
            lhs = vec[join]
            rhs = join[np.ix_(vec, vec)]
            if not leq[rhs, lhs].all():
                b, c = map(int, np.argwhere(~leq[rhs, lhs])[0])
                return f"fails at ({a}, {b}, {c})"


def _check_product_meet_bound(ctx):
    r = ctx.rig
    _need_product(r)
    mul, meet, leq = r.mul_table, r.meet_table, r.leq_table
    for a in range(r.size):
        for vec in (mul[a], mul[:, a]):
            lhs = vec[meet]
            rhs = meet[np.ix_(vec, vec)]
            if not leq[lhs, rhs].all():
                b, c = map(int, np.argwhere(~leq[lhs, rhs])[0])
                return f"fails at ({a}, {b}, {c})"


def _powers(rig, upto):
    idx = np.arange(rig.size)
    out = [idx]
    for _ in range(upto - 1):
        out.append(rig.mul_table[out[-1], idx])
    return out


def _check_power_join_bound(ctx):
    r = ctx.rig
    _need_product(r)
    join, leq = r.join_table, r.leq_table
    for n, p in enumerate(_powers(r, 3), start=1):
        lhs = p[join]
        rhs = join[np.ix_(p, p)]
        if not leq[rhs, lhs].all():
            a, b = map(int, np.argwhere(~leq[rhs, lhs])[0])
            return f"fails at n={n} ({a}, {b})"


def _check_power_meet_bound(ctx):
    r = ctx.rig
    _need_product(r)
    meet, leq = r.meet_table, r.leq_table
    for n, p in enumerate(_powers(r, 3), start=1):
        lhs = p[meet]
        rhs = meet[np.ix_(p, p)]
        if not leq[lhs, rhs].all():
            a, b = map(int, np.argwhere(~leq[lhs, rhs])[0])
            return f"fails at n={n} ({a}, {b})"


def _check_unit_unique(ctx):
    r = ctx.rig
    _need_product(r)
    idx = np.arange(r.size)
    units = [s for s in range(r.size)
             if (r.mul_table[s] == idx).all() and (r.mul_table[:, s] == idx).all()]
    if len(units) > 1:
        return f"multiple unitary elements: {units}"
    if (units and r.unit != units[0]) or (not units and r.unit is not None):
        return "cached unit disagrees with the scan"


def _check_derive_idempotent(ctx):
    r = ctx.rig
    again = core.derive(r.neg_table, r.add_table, r.mul_table,
                        names=r.carrier.names, name=r.name)
    same = (r.same_tables(again)
            and np.array_equal(r.monus_table, again.monus_table)
            and np.array_equal(r.times_table, again.times_table)
            and np.array_equal(r.join_table, again.join_table)
            and np.array_equal(r.meet_table, again.meet_table)
            and r.unit == again.unit and r.u == again.u
            and r.commutative == again.commutative
            and r.product_below_meet == again.product_below_meet)
    if not same:
        return "re-derivation changed a derived table or flag"


# -- ideal laws ----------------------------------------------------------------

def _check_ideals_sound(ctx):
    found = ctx.ideal_list
    sets = {i.members for i in found}
    if frozenset({0}) not in sets:
        return "the zero ideal is missing"
    if frozenset(range(ctx.rig.size)) not in sets:
        return "the whole carrier is missing"
    for i in found:
        ok, witness = ideals.is_ideal(ctx.rig, i.members)
        if not ok:
            return f"{i.display()} fails {witness}"


def _check_generated_least(ctx):
    r = ctx.rig
    if r.size > SUBSET_SIZE_LIMIT:
        raise _Skip(f"carrier {r.size} > {SUBSET_SIZE_LIMIT}")
    all_sets = [i.members for i in ctx.ideal_list]
    for k in range(r.size + 1):
        for seed in itertools.combinations(range(r.size), k):
            gen = ideals.generated_ideal(r, seed)
            ok, witness = ideals.is_ideal(r, gen.members)
            if not ok:
                return f"<{seed}> is not an ideal: {witness}"
            if not set(seed) <= gen.members:
                return f"<{seed}> lost its seed"
            for s in all_sets:
                if set(seed) <= s and not gen.members <= s:
                    return f"<{seed}> is not least (exceeds {sorted(s)})"
            if r.mul_table is not None:
                fix = ideals._generated_fixpoint(r, set(seed)) if seed else {0}
                if frozenset(fix) != gen.members:
                    return f"closure routes disagree on {seed}"


def _check_congruence_roundtrip(ctx):
    r = ctx.rig
    for ideal in ctx.ideal_list:
        cong = ideals.congruence_from_ideal(r, ideal)
        back = ideals.ideal_from_congruence(r, cong)
        if back.members != ideal.members:
            return f"{ideal.display()} does not round-trip"


def _check_congruence_bijection(ctx):
    r = ctx.rig
    if r.size > PARTITION_SIZE_LIMIT:
        raise _Skip(f"carrier {r.size} > {PARTITION_SIZE_LIMIT}")

    def partitions(universe):
        if not universe:
            yield []
            return
        first, rest = universe[0], universe[1:]
        for part in partitions(rest):
            for i in range(len(part)):
                yield part[:i] + [part[i] + [first]] + part[i + 1:]
            yield [[first]] + part

    congruences = []
    for part in partitions(list(range(r.size))):
        class_of = [0] * r.size
        for ci, cls in enumerate(part):
            for x in cls:
                class_of[x] = ci
        if ideals.is_congruence(r, tuple(class_of))[0]:
            congruences.append(ideals._normalize_partition(r, tuple(class_of)))
    if len(set(congruences)) != len(ctx.ideal_list):
        return (f"{len(set(congruences))} congruences vs "
                f"{len(ctx.ideal_list)} ideals")
    for class_of in congruences:
        ideal = ideals.ideal_from_congruence(r, ideals.Congruence(r, class_of))
        cong2 = ideals.congruence_from_ideal(r, ideal)
        if cong2.class_of != class_of:
            return "congruence -> ideal -> congruence is not the identity"


def _check_quotient_axioms(ctx):
    for ideal in ctx.ideal_list:
        try:
            ideals.quotient(ctx.rig, ideal)
        except MvwError as exc:
            return f"{ideal.display()}: {exc}"


def _check_first_iso_natural(ctx):
    for ideal in ctx.ideal_list:
        q = ideals.quotient(ctx.rig, ideal)
        f = ideals.Homomorphism(ctx.rig, q.rig, q.projection)
        try:
            ideals.first_iso(f)
        except MvwError as exc:
            return f"{ideal.display()}: {exc}"


def _check_hom_kernel_order(ctx):
    r = ctx.rig
    for ideal in ctx.ideal_list:
        q = ideals.quotient(r, ideal)
        f = ideals.Homomorphism(r, q.rig, q.projection)
        ker = ideals.kernel(f).members
        for x in r.elements():
            for y in r.elements():
                if q.rig.leq(f(x), f(y)) != (r.monus(x, y) in ker):
                    return f"fails at ({x}, {y}) over {ideal.display()}"


def _check_ideal_correspondence(ctx):
    for ideal in ctx.ideal_list:
        try:
            ideals.ideal_correspondence(ctx.rig, ideal)
        except MvwError as exc:
            return f"{ideal.display()}: {exc}"


def _check_maximal_exists(ctx):
    if ctx.rig.size == 1:
        raise _Skip("trivial structure")
    if not ideals.maximal_ideals(ctx.rig):
        return "no maximal proper ideal"


def _check_maximal_implies_prime(ctx):
    r = ctx.rig
    _need_commutative(r)
    _need_unit(r)
    if r.size == 1:
        raise _Skip("trivial structure")
    for m in ideals.maximal_ideals(r):
        if not ideals.classify_ideal(r, m).prime:
            return f"maximal {m.display()} is not prime"


def _check_nilpotents_in_primes(ctx):
    r = ctx.rig
    _need_product(r)
    nil = {x for x in r.elements() if ideals.is_nilpotent(r, x)}
    for p in ctx.proper_primes:
        if not nil <= p.members:
            return f"nilpotent escapes prime {p.display()}"


def _check_nilradical_ideal(ctx):
    r = ctx.rig
    _need_commutative(r)
    n = ideals.nilradical(r)
    q = ideals.quotient(r, n)
    for c in q.rig.elements():
        if c != 0 and ideals.is_nilpotent(q.rig, c):
            return f"quotient keeps nilpotent class {c}"


def _check_nilradical_intersection(ctx):
    r = ctx.rig
    _need_commutative(r)
    n = ideals.nilradical(r).members
    inter = set(r.elements())
    for p in ctx.proper_primes:
        inter &= p.members
    if n != frozenset(inter):
        return f"nilradical {sorted(n)} vs prime intersection {sorted(inter)}"


def _check_radical_properties(ctx):
    r = ctx.rig
    _need_commutative(r)
    rads = {i.members: ideals.radical(r, i, cross_check=False).members
            for i in ctx.ideal_list}
    for i in ctx.ideal_list:
        if not i.members <= rads[i.members]:
            return f"{i.display()} exceeds its radical"
        if ideals.classify_ideal(r, i).prime and rads[i.members] != i.members:
            return f"prime {i.display()} differs from its radical"
        for j in ctx.ideal_list:
            if i.members <= j.members and not rads[i.members] <= rads[j.members]:
                return "radical is not monotone"
            inter = ideals.Ideal(r, i.members & j.members)
            prod = ideals.ideal_product(r, i, j)
            if ideals.radical(r, inter, cross_check=False).members != \
                    ideals.radical(r, prod, cross_check=False).members:
                return (f"radicals of intersection and product differ for "
                        f"{i.display()}, {j.display()}")


def _check_radical_prime_intersection(ctx):
    r = ctx.rig
    _need_commutative(r)
    for i in ctx.ideal_list:
        try:
            ideals.radical(r, i, cross_check=True)
        except MvwError as exc:
            return str(exc)


def _check_prime_to_mvprime(ctx):
    r = ctx.rig
    _need_product(r)
    if not r.product_below_meet:
        raise _Skip("product is not below the meet")
    for p in ctx.proper_primes:
        if not ideals.classify_ideal(r, p).mv_prime:
            return f"prime {p.display()} is not MV-prime"


def _check_chang(ctx):
    if ctx.rig.size == 1:
        raise _Skip("trivial structure")
    try:
        ideals.chang_embedding(ctx.rig)
    except MvwError as exc:
        return str(exc)


# -- spectrum laws --------------------------------------------------------------

def _check_base_laws(ctx):
    r = ctx.rig
    _need_commutative(r)
    s = ctx.space
    for a in r.elements():
        for b in r.elements():
            va, vb = s.base[a], s.base[b]
            if va & vb != s.base[r.add(a, b)]:
                return f"intersection law fails at ({a}, {b})"
            if va & vb != s.base[r.join(a, b)]:
                return f"join law fails at ({a}, {b})"
            if va | vb != s.base[r.mul(a, b)]:
                return f"union law fails at ({a}, {b})"
            if not s.base[r.mul(a, b)] <= s.base[r.meet(a, b)]:
                return f"meet bound fails at ({a}, {b})"


def _check_full_iff_nilpotent(ctx):
    r = ctx.rig
    _need_commutative(r)
    s = ctx.space
    for a in r.elements():
        if (s.base[a] == s.all_points) != ideals.is_nilpotent(r, a):
            return f"fails at {a}"


def _check_opens_form_topology(ctx):
    _need_commutative(ctx.rig)
    s = ctx.space
    opens = set(s.opens)
    if frozenset() not in opens or s.all_points not in opens:
        return "missing the empty or full open"
    for u in opens:
        for v in opens:
            if u | v not in opens:
                return "not closed under union"
            if u & v not in opens:
                return "not closed under intersection"


def _check_t0(ctx):
    _need_commutative(ctx.rig)
    if not spectrum.is_t0(ctx.space):
        return "two points share every open"


def _check_point_closure(ctx):
    _need_commutative(ctx.rig)
    s = ctx.space
    for i in range(len(s.points)):
        if spectrum.point_closure(s, i) != spectrum.specialization_downset(s, i):
            return f"closure of point {i} is not its containment down-set"


def _check_set_closure_lower(ctx):
    _need_commutative(ctx.rig)
    s = ctx.space
    pts = range(len(s.points))
    for k in range(len(s.points) + 1):
        for u in itertools.combinations(pts, k):
            cl = spectrum.set_closure(s, u)
            below = {q for q in pts
                     if any(s.points[q] <= s.points[p] for p in u)}
            if not below <= cl:
                return f"down-set escapes the closure of {u}"
            maxima = [p for p in u
                      if not any(p != v and s.points[p] < s.points[v] for v in u)]
            if len(maxima) == 1 and cl != frozenset(below):
                return f"single-maximum converse fails for {u}"


def _check_irreducible_iff_unique_maximal(ctx):
    r = ctx.rig
    _need_commutative(r)
    _need_unit(r)
    s = ctx.space
    if r.size == 1:
        count = 0
    else:
        count = len(ideals.maximal_ideals(r))
    if spectrum.is_irreducible(s) != (count == 1):
        return f"irreducible={spectrum.is_irreducible(s)} but {count} maximal ideals"


def _check_radical_order(ctx):
    r = ctx.rig
    _need_commutative(r)
    s = ctx.space
    for a in r.elements():
        for b in r.elements():
            try:
                spectrum.radical_order_check(s, a, b)
            except MvwError as exc:
                return str(exc)


def _check_spec_compactness(ctx):
    r = ctx.rig
    _need_commutative(r)
    _need_unit(r)
    if r.size > SUBSET_SIZE_LIMIT:
        raise _Skip(f"carrier {r.size} > {SUBSET_SIZE_LIMIT}")
    s = ctx.space
    for k in range(r.size + 1):
        for gens in itertools.combinations(range(r.size), k):
            union = frozenset().union(*(s.base[a] for a in gens)) if gens else frozenset()
            if union != s.all_points:
                continue
            try:
                sub = frames.finite_subcover(r, list(gens))
            except MvwError as exc:
                return f"cover {gens}: {exc}"
            covered = frozenset().union(*(s.base[a] for a in sub)) if sub else frozenset()
            if covered != s.all_points and frames.principal_pfilter(r, r.u).members \
                    != frozenset(r.elements()):
                return f"subcover of {gens} misses a point"


# -- locale laws ----------------------------------------------------------------

def _check_pfilters_complete(ctx):
    r = ctx.rig
    _need_product(r)
    if r.size > BRUTE_PFILTER_LIMIT:
        raise _Skip(f"carrier {r.size} > {BRUTE_PFILTER_LIMIT}")
    brute = set()
    for k in range(1, r.size + 1):
        for cand in itertools.combinations(range(r.size), k):
            if frames.is_pfilter(r, set(cand))[0]:
                brute.add(frozenset(cand))
    if brute != set(ctx.frame.pfilters):
        return "the enumeration misses or invents a P-filter"


def _check_pfilter_decomposition(ctx):
    r = ctx.rig
    _need_product(r)
    prin = ctx.principal_filters
    for f in ctx.frame.pfilters:
        union = set()
        for a in f:
            union |= prin[a]
        if union != set(f):
            return f"{sorted(f)} is not the union of its principal parts"


def _check_principal_meet_law(ctx):
    r = ctx.rig
    _need_commutative(r)
    prin = ctx.principal_filters
    for a in r.elements():
        for b in r.elements():
            if prin[a] & prin[b] != prin[r.join(a, b)]:
                return f"fails at ({a}, {b})"
            ok, witness = frames.is_pfilter(r, prin[a] & prin[b])
            if not ok:
                return f"intersection at ({a}, {b}) fails {witness}"


def _check_principal_join_law(ctx):
    r = ctx.rig
    _need_commutative(r)
    prin = ctx.principal_filters
    for a in r.elements():
        for b in r.elements():
            join = frames.pfilter_generated(r, prin[a] | prin[b]).members
            if join != prin[r.mul(a, b)]:
                return f"fails at ({a}, {b})"


def _check_pfilter_generated_least(ctx):
    r = ctx.rig
    _need_product(r)
    if r.size > SUBSET_SIZE_LIMIT:
        raise _Skip(f"carrier {r.size} > {SUBSET_SIZE_LIMIT}")
    all_filters = list(ctx.frame.pfilters)
    for k in range(1, r.size + 1):
        for seed in itertools.combinations(range(r.size), k):
            gen = frames.pfilter_generated(r, seed).members
            for f in all_filters:
                if set(seed) <= f and not gen <= f:
                    return f"<{seed}> is not least"
            if r.commutative and frames.pfilter_by_formula(r, seed) != gen:
                return f"dotted-sum description of <{seed}> differs from the closure"


def _check_frame_distributivity(ctx):
    r = ctx.rig
    _need_commutative(r)
    fr = ctx.frame
    prin_idx = sorted({fr.index_of(m) for m in ctx.principal_filters.values()})
    for fi in range(len(fr.pfilters)):
        for k in range(len(prin_idx) + 1):
            for family in itertools.combinations(prin_idx, k):
                lhs = fr.meet_table[fi][fr.join_of(family)]
                rhs = fr.join_of(fr.meet_table[fi][g] for g in family)
                if lhs != rhs:
                    return f"fails for filter {fi} against family {family}"


def _check_theta_iso(ctx):
    r = ctx.rig
    _need_commutative(r)
    _need_unit(r)
    try:
        tm = frames.theta(r, space=ctx.space, fr=ctx.frame, verify=True)
    except MvwError as exc:
        return str(exc)
    if len(tm.space.opens) != len(tm.frame.pfilters):
        return "open lattice and P-filter frame have different sizes"


def _check_frame_covers(ctx):
    r = ctx.rig
    _need_product(r)
    if r.size > SUBSET_SIZE_LIMIT:
        raise _Skip(f"carrier {r.size} > {SUBSET_SIZE_LIMIT}")
    fr = ctx.frame
    full = frozenset(r.elements())
    prin = ctx.principal_filters
    for k in range(1, r.size + 1):
        for gens in itertools.combinations(range(r.size), k):
            join = fr.join_of(fr.index_of(prin[g]) for g in gens)
            covers = fr.pfilters[join] == full
            try:
                sub = frames.finite_subcover(r, list(gens))
            except frames.NotACover:
                if covers:
                    return f"{gens} covers but was rejected"
                continue
            if not covers:
                return f"{gens} does not cover but a subcover was returned"
            if sub:
                back = fr.join_of(fr.index_of(prin[g]) for g in sub)
                if fr.pfilters[back] != full:
                    return f"subcover of {gens} has a proper join"


SUITES = {
    "core": [
        ("mv-axioms", "the six MV equations hold", _check_mv_axioms),
        ("mvw-axioms", "product axioms: associativity, zero, distributivity bounds",
         _check_mvw_axioms),
        ("order-lattice", "the monus order is a lattice order with bottom 0 and top u",
         _check_order_lattice),
        ("residuation", "x <= y+z iff x-z <= y", _check_residuation),
        ("monus-superadditive", "(x1+x2)-(y1+y2) <= (x1-y1)+(x2-y2)",
         _check_monus_superadditive),
        ("monus-superadditive-nary", "the same bound for sums of 3 and 4 terms",
         _check_monus_superadditive_nary),
        ("product-monotone", "products preserve the order in each argument",
         _check_product_monotone),
        ("product-join-bound", "a(b v c) >= ab v ac on both sides",
         _check_product_join_bound),
        ("product-meet-bound", "a(b ^ c) <= ab ^ ac on both sides",
         _check_product_meet_bound),
        ("power-join-bound", "(a v b)^n >= a^n v b^n for n <= 3",
         _check_power_join_bound),
        ("power-meet-bound", "(a ^ b)^n <= a^n ^ b^n for n <= 3",
         _check_power_meet_bound),
        ("unit-unique", "at most one unitary element exists", _check_unit_unique),
        ("derive-idempotent", "re-deriving a derived structure changes nothing",
         _check_derive_idempotent),
    ],
    "ideals": [
        ("ideals-sound", "every enumerated ideal satisfies all ideal clauses",
         _check_ideals_sound),
        ("generated-least", "generated ideals are least and both closure routes agree",
         _check_generated_least),
        ("congruence-roundtrip", "ideal -> congruence -> ideal is the identity",
         _check_congruence_roundtrip),
        ("congruence-bijection", "congruences and ideals are in bijection",
         _check_congruence_bijection),
        ("quotient-axioms", "every quotient passes the axiom checker with the "
         "projection as kernel homomorphism", _check_quotient_axioms),
        ("first-iso", "the quotient by a kernel is isomorphic to the image",
         _check_first_iso_natural),
        ("hom-kernel-order", "f(x) <= f(y) iff x-y lies in the kernel",
         _check_hom_kernel_order),
        ("ideal-correspondence", "ideals above I correspond to ideals of the quotient",
         _check_ideal_correspondence),
        ("maximal-exists", "every nontrivial structure has a maximal proper ideal",
         _check_maximal_exists),
        ("maximal-implies-prime", "with a unit and commutativity, maximal ideals "
         "are prime", _check_maximal_implies_prime),
        ("nilpotents-in-primes", "nilpotents lie in every proper prime",
         _check_nilpotents_in_primes),
        ("nilradical-ideal", "the nilpotents form an ideal with a reduced quotient",
         _check_nilradical_ideal),
        ("nilradical-intersection", "the nilradical is the intersection of the "
         "proper primes", _check_nilradical_intersection),
        ("radical-properties", "radical containment, monotonicity, fixed points "
         "on primes, and product/intersection agreement", _check_radical_properties),
        ("radical-prime-intersection", "the radical equals the intersection of the "
         "primes above the ideal", _check_radical_prime_intersection),
        ("prime-to-mvprime", "when ab <= a^b, prime ideals are MV-prime",
         _check_prime_to_mvprime),
        ("chang-embedding", "the structure embeds into a product of chains",
         _check_chang),
    ],
    "spectrum": [
        ("base-laws", "the basic opens respect sum, join, product and meet",
         _check_base_laws),
        ("full-iff-nilpotent", "V(a) is everything iff a is nilpotent",
         _check_full_iff_nilpotent),
        ("opens-form-topology", "the opens close under union and intersection",
         _check_opens_form_topology),
        ("t0", "distinct points are separated by some open", _check_t0),
        ("point-closure", "the closure of a point is its containment down-set",
         _check_point_closure),
        ("set-closure", "down-sets sit inside closures; equality under a single "
         "maximum", _check_set_closure_lower),
        ("irreducible-iff-unique-maximal", "irreducibility matches having exactly "
         "one maximal ideal", _check_irreducible_iff_unique_maximal),
        ("radical-order", "open containment matches the reverse radical order",
         _check_radical_order),
        ("compactness", "every basic cover has a finite subcover",
         _check_spec_compactness),
    ],
    "locale": [
        ("pfilters-complete", "the P-filter enumeration matches a brute-force scan",
         _check_pfilters_complete),
        ("pfilter-decomposition", "every P-filter is the union of its principal "
         "parts", _check_pfilter_decomposition),
        ("principal-meet-law", "principal filters meet along the join of elements",
         _check_principal_meet_law),
        ("principal-join-law", "principal filters join along the product of "
         "elements", _check_principal_join_law),
        ("pfilter-generated-least", "generated P-filters are least",
         _check_pfilter_generated_least),
        ("frame-distributivity", "meets distribute over joins of principal filters",
         _check_frame_distributivity),
        ("theta-iso", "the open lattice and the P-filter frame are isomorphic",
         _check_theta_iso),
        ("frame-covers", "covers by principal filters admit finite subcovers",
         _check_frame_covers),
    ],
}

SUITE_NAMES = tuple(SUITES)


def run_suite(rig, suite: str, frame_bound=frames.DEFAULT_FRAME_BOUND):
    """Run one named suite; gated checks report SKIPPED with the reason."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    ctx = _Ctx(rig, frame_bound=frame_bound)
    results = []
    for name, _desc, fn in SUITES[suite]:
        try:
            detail = fn(ctx)
        except _Skip as skip:
            results.append(CheckResult(suite, name, "SKIPPED", str(skip)))
            continue
        except SizeBound as exc:
            results.append(CheckResult(suite, name, "SKIPPED", str(exc)))
            continue
        if detail is None:
            results.append(CheckResult(suite, name, "PASS"))
        else:
            results.append(CheckResult(suite, name, "FAIL", detail))
    return results


def run_all(rig, frame_bound=frames.DEFAULT_FRAME_BOUND):
    out = []
    for suite in SUITE_NAMES:
        out.extend(run_suite(rig, suite, frame_bound=frame_bound))
    return out


def listing():
    """(suite, check, description) rows for the traceability table."""
    rows = []
    for suite, checks in SUITES.items():
        for name, desc, _fn in checks:
            rows.append((suite, name, desc))
    return rows
