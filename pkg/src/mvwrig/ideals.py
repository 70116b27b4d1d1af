"""Ideal theory: membership, generation, enumeration, classification,
radicals, congruences, quotients, homomorphisms and the subdirect
embedding into chains.

All answers are exact: generation runs closures to a fixpoint, nilpotency
searches are bounded by the carrier size (the power sequence of an element
cycles within |A| steps), and every structural theorem consumed elsewhere
is re-verified here rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import builders, core
from .core import FiniteMvwRig
from .errors import (
    GateNotMet,
    MvwError,
    NotACongruence,
    NotAHomomorphism,
    NotCommutative,
    SizeBound,
    Trivial,
)


@dataclass(frozen=True)
class Ideal:
    rig: FiniteMvwRig
    members: frozenset

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def proper(self) -> bool:
        return len(self.members) < self.rig.size

    def display(self) -> str:
        return "{" + ", ".join(self.rig.element_name(a) for a in self.sorted_members()) + "}"

    def __contains__(self, a: int) -> bool:
        return a in self.members


def format_subset(rig: FiniteMvwRig, members) -> str:
    return "{" + ", ".join(rig.element_name(a) for a in sorted(members)) + "}"


# -- membership tests ------------------------------------------------------

def is_mv_ideal(rig: FiniteMvwRig, members):
    """Check 0-membership, downward closure and sum closure.

    Returns (ok, witness); the witness names the violated clause.
    """
    s = set(members)
    if 0 not in s:
        return False, ("zero", (0,))
    for b in s:
        for a in rig.elements():
            if rig.leq(a, b) and a not in s:
                return False, ("downward", (a, b))
    for a in s:
        for b in s:
            if rig.add(a, b) not in s:
                return False, ("sum", (a, b))
    return True, None


def is_ideal(rig: FiniteMvwRig, members):
    """An MV-ideal that also absorbs products on both sides."""
    ok, witness = is_mv_ideal(rig, members)
    if not ok:
        return ok, witness
    if rig.mul_table is not None:
        s = set(members)
        for a in s:
            for b in rig.elements():
                if rig.mul(a, b) not in s or rig.mul(b, a) not in s:
                    return False, ("absorb", (a, b))
    return True, None


# -- generation ------------------------------------------------------------

def _oplus_closure(rig, seed):
    out = set(seed)
    frontier = set(seed)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in out:
                for c in (rig.add(a, b), rig.add(b, a)):
                    if c not in out:
                        fresh.add(c)
        out |= fresh
        frontier = fresh
    return out


def _downward(rig, seed):
    out = set(seed)
    for b in seed:
        out.update(a for a in rig.elements() if rig.leq(a, b))
    return out


def generated_mv_ideal(rig: FiniteMvwRig, seed) -> Ideal:
    """Least MV-ideal containing the seed: downward closure of the
    sum closure (natural multiples arise from repeated sums)."""
    seed = set(seed)
    if not seed:
        return Ideal(rig, frozenset({0}))
    members = _downward(rig, _oplus_closure(rig, seed)) | {0}
    return Ideal(rig, frozenset(members))


def _generated_fixpoint(rig, seed):
    """Least ideal by iterated closure under sums, the order and both
    one-sided products; correct for noncommutative structures too."""
    members = {0} | set(seed)
    while True:
        before = len(members)
        members = _downward(rig, _oplus_closure(rig, members))
        if rig.mul_table is not None:
            extra = set()
            for a in members:
                for b in rig.elements():
                    extra.add(rig.mul(a, b))
                    extra.add(rig.mul(b, a))
            members |= extra
        if len(members) == before:
            return members


def generated_ideal(rig: FiniteMvwRig, seed) -> Ideal:
    """Least ideal containing the seed.

    For commutative structures this materializes the dotted-sum formula:
    downward closure of the sum closure of {a.s} union {s}.  Otherwise it
    falls back to the two-sided fixpoint closure, which is still the least
    ideal.
    """
    seed = {rig._check(a) for a in seed}
    if not seed:
        return Ideal(rig, frozenset({0}))
    if rig.mul_table is None:
        return generated_mv_ideal(rig, seed)
    if not rig.commutative:
        return Ideal(rig, frozenset(_generated_fixpoint(rig, seed)))
    terms = set(seed)
    for s in seed:
        terms.update(rig.mul(a, s) for a in rig.elements())
    members = _downward(rig, _oplus_closure(rig, terms)) | {0}
    return Ideal(rig, frozenset(members))


def _enumerate_by_closure(rig, generate, bound):
    bound = builders.size_bound() if bound is None else bound
    if rig.size > bound:
        raise SizeBound(f"carrier of {rig.size} exceeds enumeration bound {bound}")
    zero = generate(rig, set()).members
    found = {zero}
    frontier = [zero]
    while frontier:
        base = frontier.pop()
        for a in rig.elements():
            if a in base:
                continue
            bigger = generate(rig, set(base) | {a}).members
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def enumerate_ideals(rig: FiniteMvwRig, bound: int | None = None):
    """All ideals, smallest first.  Complete: every ideal is the closure of
    its own elements, so adding generators one at a time reaches all of them."""
    return [Ideal(rig, s) for s in _enumerate_by_closure(rig, generated_ideal, bound)]


def enumerate_mv_ideals(rig: FiniteMvwRig, bound: int | None = None):
    return [Ideal(rig, s) for s in _enumerate_by_closure(rig, generated_mv_ideal, bound)]


# -- classification --------------------------------------------------------

@dataclass(frozen=True)
class IdealClass:
    prime: bool
    mv_prime: bool
    maximal: bool
    proper: bool


def classify_ideal(rig: FiniteMvwRig, ideal: Ideal) -> IdealClass:
    """Raw clause checks; the whole carrier satisfies the prime and maximal
    clauses vacuously, so consumers that need properness combine these with
    the ``proper`` bit (the spectrum admits proper primes only)."""
    s = ideal.members
    prime = True
    if rig.mul_table is not None:
        prime = all(rig.mul(a, b) not in s or a in s or b in s
                    for a in rig.elements() for b in rig.elements())
    mv_prime = all(rig.meet(a, b) not in s or a in s or b in s
                   for a in rig.elements() for b in rig.elements())
    maximal = all(generated_ideal(rig, set(s) | {a}).members == frozenset(rig.elements())
                  for a in rig.elements() if a not in s)
    return IdealClass(prime=prime, mv_prime=mv_prime, maximal=maximal,
                      proper=ideal.proper)


def prime_ideals(rig: FiniteMvwRig):
    """Proper ideals satisfying the product-prime clause: the points of the
    spectrum."""
    out = []
    for ideal in enumerate_ideals(rig):
        if ideal.proper and classify_ideal(rig, ideal).prime:
            out.append(ideal)
    return out


def maximal_ideals(rig: FiniteMvwRig):
    """All maximal proper ideals; nonempty for every nontrivial structure."""
    if rig.size == 1:
        raise Trivial("the one-element structure has no proper ideals")
    out = [i for i in enumerate_ideals(rig)
           if i.proper and classify_ideal(rig, i).maximal]
    if not out:
        raise MvwError("no maximal ideal found in a nontrivial structure")
    return out


# -- nilpotents and radicals -------------------------------------------------

def is_nilpotent(rig: FiniteMvwRig, x: int) -> bool:
    """Some power of x is 0; powers cycle within |A| steps, so the search
    is bounded and exact."""
    acc = rig._check(x)
    for _ in range(rig.size):
        if acc == 0:
            return True
        acc = rig.mul(acc, x)
    return acc == 0


def _require_commutative(rig):
    if rig.mul_table is None:
        raise GateNotMet("structure has no product")
    if not rig.commutative:
        raise NotCommutative(f"{rig.name} is not commutative")


def nilradical(rig: FiniteMvwRig) -> Ideal:
    """The ideal of nilpotent elements (commutative structures only)."""
    _require_commutative(rig)
    members = frozenset(x for x in rig.elements() if is_nilpotent(rig, x))
    ok, witness = is_ideal(rig, members)
    if not ok:
        raise MvwError(f"nilpotent set is not an ideal: {witness}")
    return Ideal(rig, members)


def radical(rig: FiniteMvwRig, ideal: Ideal, cross_check: bool = True) -> Ideal:
    """Elements with some power in the ideal.

    When ``cross_check`` is set, the result is verified against the
    intersection of the proper primes containing the ideal (the empty
    intersection being the whole carrier).
    """
    _require_commutative(rig)
    direct = set()
    for x in rig.elements():
        acc = x
        for _ in range(rig.size):
            if acc in ideal.members:
                direct.add(x)
                break
            acc = rig.mul(acc, x)
        else:
            if acc in ideal.members:
                direct.add(x)
    if cross_check:
        primes = [p.members for p in prime_ideals(rig) if ideal.members <= p.members]
        inter = set(rig.elements())
        for p in primes:
            inter &= p
        if set(direct) != inter:
            raise MvwError(
                f"radical mismatch on {rig.name}: definition gives "
                f"{sorted(direct)}, prime intersection gives {sorted(inter)}")
    return Ideal(rig, frozenset(direct))


def ideal_join(rig: FiniteMvwRig, i: Ideal, j: Ideal) -> Ideal:
    return generated_ideal(rig, i.members | j.members)


def ideal_product(rig: FiniteMvwRig, i: Ideal, j: Ideal) -> Ideal:
    pairs = {rig.mul(a, b) for a in i.members for b in j.members}
    return generated_ideal(rig, pairs)


# -- congruences ------------------------------------------------------------

@dataclass(frozen=True)
class Congruence:
    rig: FiniteMvwRig
    class_of: tuple[int, ...]

    def classes(self):
        buckets = {}
        for x, c in enumerate(self.class_of):
            buckets.setdefault(c, set()).add(x)
        return tuple(frozenset(buckets[c]) for c in sorted(buckets))

    def together(self, x, y) -> bool:
        return self.class_of[x] == self.class_of[y]


def _normalize_partition(rig, class_of):
    """Renumber classes so the class of 0 is 0 and classes follow their
    least elements."""
    reps = {}
    for x, c in enumerate(class_of):
        reps.setdefault(c, x)
    order = sorted(reps, key=lambda c: reps[c])
    renum = {c: i for i, c in enumerate(order)}
    return tuple(renum[c] for c in class_of)


def is_congruence(rig: FiniteMvwRig, class_of):
    """Exact compatibility check of a partition with every operation."""
    if len(class_of) != rig.size:
        return False, ("shape", (len(class_of),))
    buckets = {}
    for x, c in enumerate(class_of):
        buckets.setdefault(c, []).append(x)
    for cls in buckets.values():
        base = cls[0]
        for x in cls[1:]:
            if class_of[rig.neg(base)] != class_of[rig.neg(x)]:
                return False, ("neg", (base, x))
            for y in rig.elements():
                if class_of[rig.add(base, y)] != class_of[rig.add(x, y)]:
                    return False, ("add", (base, x, y))
                if class_of[rig.add(y, base)] != class_of[rig.add(y, x)]:
                    return False, ("add", (y, base, x))
                if rig.mul_table is not None:
                    if class_of[rig.mul(base, y)] != class_of[rig.mul(x, y)]:
                        return False, ("mul", (base, x, y))
                    if class_of[rig.mul(y, base)] != class_of[rig.mul(y, x)]:
                        return False, ("mul", (y, base, x))
    return True, None


def congruence_from_ideal(rig: FiniteMvwRig, ideal: Ideal) -> Congruence:
    """x ~ y iff (x - y) + (y - x) lies in the ideal."""
    ok, witness = is_ideal(rig, ideal.members)
    if not ok:
        raise ValueError(f"not an ideal: {witness}")
    mask = np.zeros(rig.size, dtype=bool)
    mask[list(ideal.members)] = True
    sym_diff = rig.add_table[rig.monus_table, rig.monus_table.T]
    related = mask[sym_diff]
    class_of = [-1] * rig.size
    nxt = 0
    for x in rig.elements():
        if class_of[x] < 0:
            for y in np.flatnonzero(related[x]):
                class_of[int(y)] = nxt
            nxt += 1
    cong = Congruence(rig, _normalize_partition(rig, tuple(class_of)))
    ok, witness = is_congruence(rig, cong.class_of)
    if not ok:
        raise MvwError(f"ideal congruence failed compatibility: {witness}")
    return cong


def ideal_from_congruence(rig: FiniteMvwRig, cong) -> Ideal:
    """The class of 0; raises NotACongruence with a witness for invalid
    partitions."""
    class_of = cong.class_of if isinstance(cong, Congruence) else tuple(cong)
    ok, witness = is_congruence(rig, class_of)
    if not ok:
        raise NotACongruence(*witness)
    members = frozenset(x for x in rig.elements() if class_of[x] == class_of[0])
    ok, witness = is_ideal(rig, members)
    if not ok:
        raise MvwError(f"zero class is not an ideal: {witness}")
    return Ideal(rig, members)


# -- quotients ---------------------------------------------------------------

@dataclass
class QuotientRig:
    parent: FiniteMvwRig
    ideal: Ideal
    rig: FiniteMvwRig
    projection: tuple[int, ...]
    reps: tuple[int, ...]


def _quotient_impl(rig, ideal, keep_product):
    cong = congruence_from_ideal(rig, ideal)
    classes = cong.classes()
    reps = sorted(min(c) for c in classes)
    proj = [0] * rig.size
    for i, r in enumerate(reps):
        cls = next(c for c in classes if r in c)
        for x in cls:
            proj[x] = i
    k = len(reps)
    neg = [proj[rig.neg(r)] for r in reps]
    add = [[proj[rig.add(r, s)] for s in reps] for r in reps]
    mul = None
    if keep_product and rig.mul_table is not None:
        mul = [[proj[rig.mul(r, s)] for s in reps] for r in reps]
    names = tuple("[" + rig.element_name(r) + "]" for r in reps)
    qname = f"{rig.name}/{format_subset(rig, ideal.members)}"
    q = core.derive(neg, add, mul, names=names, name=qname)
    report = core.check_mv(q) if mul is None else core.check_all(q)
    if not report.passed:
        raise MvwError(f"quotient failed axioms: {report.failed_axioms()}")
    return QuotientRig(parent=rig, ideal=ideal, rig=q,
                       projection=tuple(proj), reps=tuple(reps))


def quotient(rig: FiniteMvwRig, ideal: Ideal) -> QuotientRig:
    """The structure of congruence classes; the projection is a surjective
    homomorphism whose kernel is the ideal."""
    q = _quotient_impl(rig, ideal, keep_product=True)
    proj = Homomorphism(rig, q.rig, q.projection)
    ok, witness = check_homomorphism(proj)
    if not ok:
        raise MvwError(f"projection is not a homomorphism: {witness}")
    if kernel(proj).members != ideal.members:
        raise MvwError("projection kernel differs from the ideal")
    return q


def mv_quotient(rig: FiniteMvwRig, ideal: Ideal) -> QuotientRig:
    """Quotient of the underlying MV-algebra by an MV-ideal; the product,
    if any, is dropped (an MV-ideal need not absorb it)."""
    ok, witness = is_mv_ideal(rig, ideal.members)
    if not ok:
        raise ValueError(f"not an MV-ideal: {witness}")
    mv = rig
    if rig.mul_table is not None:
        mv = core.derive(rig.neg_table, rig.add_table, None,
                         names=rig.carrier.names, name=rig.name)
    return _quotient_impl(mv, Ideal(mv, ideal.members), keep_product=False)


# -- homomorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    source: FiniteMvwRig
    target: FiniteMvwRig
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def check_homomorphism(f: Homomorphism, require_product=None):
    """Exact verification of the homomorphism clauses.

    The product clause applies when both sides carry a product (or always,
    with ``require_product=True``).
    """
    a, b, m = f.source, f.target, f.mapping
    if len(m) != a.size or any(not 0 <= v < b.size for v in m):
        return False, ("total", ())
    if m[0] != 0:
        return False, ("zero", (0,))
    for x in a.elements():
        if m[a.neg(x)] != b.neg(m[x]):
            return False, ("neg", (x,))
        for y in a.elements():
            if m[a.add(x, y)] != b.add(m[x], m[y]):
                return False, ("add", (x, y))
    if require_product is None:
        require_product = a.mul_table is not None and b.mul_table is not None
    if require_product:
        if a.mul_table is None or b.mul_table is None:
            return False, ("product-missing", ())
        for x in a.elements():
            for y in a.elements():
                if m[a.mul(x, y)] != b.mul(m[x], m[y]):
                    return False, ("mul", (x, y))
    return True, None


def verify_homomorphism(f: Homomorphism, require_product=None) -> Homomorphism:
    ok, witness = check_homomorphism(f, require_product)
    if not ok:
        raise NotAHomomorphism(*witness)
    return f


def _preserves_product(f: Homomorphism) -> bool:
    return f.source.mul_table is not None and f.target.mul_table is not None


def kernel(f: Homomorphism) -> Ideal:
    """The preimage of 0; an ideal (an MV-ideal when the map is only a
    homomorphism of the underlying MV-algebras)."""
    members = frozenset(x for x in f.source.elements() if f.mapping[x] == 0)
    test = is_ideal if _preserves_product(f) else is_mv_ideal
    ok, witness = test(f.source, members)
    if not ok:
        raise MvwError(f"kernel is not an ideal: {witness}")
    return Ideal(f.source, members)


def image(f: Homomorphism):
    """The image as a substructure of the target, with its inclusion.

    For a homomorphism of the underlying MV-algebras only, the image is a
    substructure of the target's MV-reduct (it need not be closed under a
    product the map ignores).
    """
    target = f.target
    if not _preserves_product(f) and target.mul_table is not None:
        target = core.derive(target.neg_table, target.add_table, None,
                             names=target.carrier.names, name=target.name)
    return core.restrict(target, set(f.mapping))


def enumerate_homomorphisms(a: FiniteMvwRig, b: FiniteMvwRig, limit: int = 10 ** 6):
    """All homomorphisms a -> b by exhaustive map search (desk scale)."""
    import itertools
    total = b.size ** max(a.size - 1, 0)
    if total > limit:
        raise SizeBound(f"{total} candidate maps exceed limit {limit}")
    out = []
    for rest in itertools.product(range(b.size), repeat=a.size - 1):
        f = Homomorphism(a, b, (0,) + rest)
        if check_homomorphism(f)[0]:
            out.append(f)
    return out


@dataclass
class FirstIso:
    hom: Homomorphism
    quot: QuotientRig
    image_rig: FiniteMvwRig
    image_embedding: tuple[int, ...]
    iso: Homomorphism


def first_iso(f: Homomorphism) -> FirstIso:
    """The canonical isomorphism between the quotient by the kernel and the
    image; failure would indicate an implementation bug and aborts."""
    both = _preserves_product(f)
    verify_homomorphism(f)
    k = kernel(f)
    q = quotient(f.source, k) if both else mv_quotient(f.source, k)
    img, embedding = image(f)
    back = {p: i for i, p in enumerate(embedding)}
    phi_bar = tuple(back[f.mapping[r]] for r in q.reps)
    for x in f.source.elements():
        if phi_bar[q.projection[x]] != back[f.mapping[x]]:
            raise MvwError("induced map is not well defined")
    if sorted(phi_bar) != list(range(img.size)):
        raise MvwError("induced map is not a bijection")
    iso = Homomorphism(q.rig, img, phi_bar)
    ok, witness = check_homomorphism(iso, require_product=both or None)
    if not ok:
        raise MvwError(f"induced map fails a clause: {witness}")
    return FirstIso(hom=f, quot=q, image_rig=img,
                    image_embedding=embedding, iso=iso)


def ideal_correspondence(rig: FiniteMvwRig, ideal: Ideal):
    """The bijection between ideals above the given one and ideals of the
    quotient, verified in both directions and order-preserving."""
    q = quotient(rig, ideal)
    above = [j for j in enumerate_ideals(rig) if ideal.members <= j.members]
    below = enumerate_ideals(q.rig)
    below_sets = {j.members for j in below}
    pairs = []
    for j in above:
        img = frozenset(q.projection[a] for a in j.members)
        if img not in below_sets:
            raise MvwError(f"image of {j.display()} is not an ideal of the quotient")
        pairs.append((j, Ideal(q.rig, img)))
    if len({img.members for _, img in pairs}) != len(pairs):
        raise MvwError("correspondence is not injective")
    if len(pairs) != len(below):
        raise MvwError("correspondence is not surjective")
    for j1, i1 in pairs:
        for j2, i2 in pairs:
            if (j1.members <= j2.members) != (i1.members <= i2.members):
                raise MvwError("correspondence does not preserve inclusion")
    return pairs


# -- subdirect embedding into chains ------------------------------------------

@dataclass
class ChangEmbedding:
    rig: FiniteMvwRig
    primes: list
    quotients: list
    product: FiniteMvwRig
    mapping: tuple[int, ...]


def chang_embedding(rig: FiniteMvwRig) -> ChangEmbedding:
    """Embed a nontrivial MV-algebra into the product of its quotients by
    MV-prime ideals; every factor is totally ordered and the canonical map
    is an injective MV-homomorphism with surjective coordinates."""
    if rig.size == 1:
        raise Trivial("the one-element algebra has no subdirect decomposition")
    primes = []
    for ideal in enumerate_mv_ideals(rig):
        if not ideal.proper:
            continue
        cls = classify_ideal(rig, ideal)
        if cls.mv_prime:
            primes.append(ideal)
    if not primes:
        raise MvwError(f"no MV-prime ideals found in nontrivial {rig.name}")
    quotients = [mv_quotient(rig, p) for p in primes]
    for q in quotients:
        if not (q.rig.leq_table | q.rig.leq_table.T).all():
            raise MvwError(f"quotient by {q.ideal.display()} is not a chain")
    product = builders.direct_product([q.rig for q in quotients])
    mapping = []
    for x in rig.elements():
        idx = 0
        for q in quotients:
            idx = idx * q.rig.size + q.projection[x]
        mapping.append(idx)
    emb = Homomorphism(rig, product, tuple(mapping))
    ok, witness = check_homomorphism(emb, require_product=False)
    if not ok:
        raise MvwError(f"canonical map fails a clause: {witness}")
    if len(set(mapping)) != rig.size:
        raise MvwError("canonical map is not injective")
    for q in quotients:
        if set(q.projection) != set(range(q.rig.size)):
            raise MvwError("a coordinate projection is not surjective")
    return ChangEmbedding(rig=rig, primes=primes, quotients=quotients,
                          product=product, mapping=tuple(mapping))
