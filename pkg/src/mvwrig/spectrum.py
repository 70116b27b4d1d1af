"""The prime spectrum with the co-Zariski topology.

Points are the proper prime ideals; the basic open attached to an element
a collects the points containing a.  The space is finite, so the open
lattice is materialized outright and every topological statement becomes
a finite assertion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ideals
from .core import FiniteMvwRig
from .errors import GateNotMet, MvwError, NotCommutative


@dataclass
class SpecSpace:
    rig: FiniteMvwRig
    points: tuple            # frozensets of carrier indices, canonically sorted
    base: dict               # element -> frozenset of point indices
    opens: tuple             # all unions of base sets, canonically sorted
    unit_gated: bool = False # no unit: unit-dependent theorems are skipped
    warnings: list = field(default_factory=list)

    @property
    def all_points(self):
        return frozenset(range(len(self.points)))

    def point_display(self, i: int) -> str:
        return ideals.format_subset(self.rig, self.points[i])


def _canon_sets(sets):
    return tuple(sorted(sets, key=lambda s: (len(s), sorted(s))))


def spec(rig: FiniteMvwRig) -> SpecSpace:
    """Enumerate the proper primes, materialize the basic opens and their
    unions, and verify the base laws that make them a base."""
    if rig.mul_table is None:
        raise GateNotMet("spectrum needs a product")
    if not rig.commutative:
        raise NotCommutative(f"{rig.name} is not commutative")
    primes = ideals.prime_ideals(rig)
    points = _canon_sets([p.members for p in primes])
    base = {a: frozenset(i for i, p in enumerate(points) if a in p)
            for a in rig.elements()}

    opens = {frozenset()} | set(base.values())
    while True:
        fresh = {u | v for u in opens for v in opens} - opens
        if not fresh:
            break
        opens |= fresh

    space = SpecSpace(rig=rig, points=points, base=base,
                      opens=_canon_sets(opens), unit_gated=rig.unit is None)
    if space.unit_gated:
        space.warnings.append(
            f"{rig.name} has no unitary element; unit-gated theorems are skipped")

    all_pts = space.all_points
    if base[0] != all_pts:
        raise MvwError("V(0) is not the whole spectrum")
    if base[rig.u] != frozenset():
        raise MvwError("V(u) is not empty")
    for a in rig.elements():
        for b in rig.elements():
            if base[a] & base[b] != base[rig.add(a, b)]:
                raise MvwError(f"V({a}) and V({b}) break the intersection law")
    return space


def basic_open(space: SpecSpace, a: int):
    return space.base[space.rig._check(a)]


def v_of_set(space: SpecSpace, members):
    """Points containing a whole subset (the open attached to an ideal)."""
    ms = frozenset(members)
    return frozenset(i for i, p in enumerate(space.points) if ms <= p)


def is_t0(space: SpecSpace) -> bool:
    pts = range(len(space.points))
    for p in pts:
        for q in pts:
            if p < q and not any((p in o) != (q in o) for o in space.opens):
                return False
    return True


def is_irreducible(space: SpecSpace) -> bool:
    """Nonempty, and every two nonempty opens meet."""
    if not space.points:
        return False
    nonempty = [o for o in space.opens if o]
    return all(u & v for u in nonempty for v in nonempty)


def set_closure(space: SpecSpace, subset):
    """Smallest closed superset, computed from the materialized opens."""
    subset = frozenset(subset)
    cl = set(space.all_points)
    for o in space.opens:
        closed = space.all_points - o
        if subset <= closed:
            cl &= closed
    return frozenset(cl)


def point_closure(space: SpecSpace, i: int):
    return set_closure(space, {i})


def specialization_downset(space: SpecSpace, i: int):
    """{Q : Q contained in P} for the point P; equals the closure of P."""
    p = space.points[i]
    return frozenset(j for j, q in enumerate(space.points) if q <= p)


@dataclass
class SpecMap:
    hom: ideals.Homomorphism
    source: SpecSpace        # Spec of the codomain rig
    target: SpecSpace        # Spec of the domain rig
    mapping: tuple           # point index of source -> point index of target


def spec_map(f: ideals.Homomorphism, spec_b: SpecSpace | None = None,
             spec_a: SpecSpace | None = None) -> SpecMap:
    """The continuous preimage map from Spec of the codomain to Spec of the
    domain, with each of its stated properties checked whenever its
    hypothesis holds."""
    ideals.verify_homomorphism(f)
    a, b = f.source, f.target
    sa = spec_a if spec_a is not None else spec(a)
    sb = spec_b if spec_b is not None else spec(b)
    target_index = {p: i for i, p in enumerate(sa.points)}

    mapping = []
    for q in sb.points:
        pre = frozenset(x for x in a.elements() if f.mapping[x] in q)
        if pre not in target_index:
            raise MvwError(f"preimage {sorted(pre)} is not a proper prime")
        mapping.append(target_index[pre])
    mapping = tuple(mapping)
    phi = SpecMap(hom=f, source=sb, target=sa, mapping=mapping)

    opens_b = set(sb.opens)
    for x in a.elements():
        pre_open = frozenset(i for i in range(len(sb.points))
                             if mapping[i] in sa.base[x])
        if pre_open not in opens_b:
            raise MvwError(f"preimage of V({x}) is not open")

    for ideal in ideals.enumerate_ideals(a):
        lhs = frozenset(i for i in range(len(sb.points))
                        if mapping[i] in v_of_set(sa, ideal.members))
        rhs = v_of_set(sb, {f.mapping[x] for x in ideal.members})
        if lhs != rhs:
            raise MvwError(f"preimage law fails for ideal {ideal.display()}")

    injective = len(set(f.mapping)) == a.size
    if injective:
        back = {f.mapping[x]: x for x in a.elements()}
        for bel in set(f.mapping):
            img = frozenset(mapping[i] for i in sb.base[bel])
            if img != sa.base[back[bel]]:
                raise MvwError(f"image law fails at element {bel}")
        if frozenset(mapping) != sa.all_points:
            raise MvwError("image of the spectrum map misses a prime")

    bijective = injective and len(set(f.mapping)) == b.size
    if bijective:
        ker = ideals.kernel(f)
        sub = v_of_set(sa, ker.members)
        if frozenset(mapping) != sub or len(set(mapping)) != len(mapping):
            raise MvwError("bijective map does not induce a homeomorphism")
        sub_opens = {o & sub for o in sa.opens}
        img_opens = {frozenset(mapping[i] for i in o) for o in sb.opens}
        if sub_opens != img_opens:
            raise MvwError("open sets do not correspond under the induced map")
    return phi


def radical_order_check(space: SpecSpace, a: int, b: int) -> bool:
    """V(a) inside V(b) iff the radical of <b> is inside the radical of <a>;
    both routes are computed and must agree."""
    rig = space.rig
    cond_v = space.base[a] <= space.base[b]
    rad_a = ideals.radical(rig, ideals.generated_ideal(rig, {a}))
    rad_b = ideals.radical(rig, ideals.generated_ideal(rig, {b}))
    cond_r = rad_b.members <= rad_a.members
    if cond_v != cond_r:
        raise MvwError(f"radical/open order disagree at ({a}, {b})")
    return cond_v


def covering_edges(sets):
    """Transitive reduction of strict containment among a list of sets."""
    edges = []
    for i, s in enumerate(sets):
        for j, t in enumerate(sets):
            if i != j and s < t:
                if not any(k != i and k != j and s < sets[k] < t
                           for k in range(len(sets))):
                    edges.append((i, j))
    return edges


def export_dot(space: SpecSpace) -> str:
    """The specialization order as a DOT digraph (edges are covering pairs
    of containment)."""
    lines = ["digraph spec {", "  rankdir=BT;"]
    for i in range(len(space.points)):
        lines.append(f'  p{i} [label="{space.point_display(i)}"];')
    for i, j in covering_edges(list(space.points)):
        lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json_doc(space: SpecSpace) -> dict:
    return {
        "points": [sorted(p) for p in space.points],
        "base": {str(a): sorted(space.base[a]) for a in space.rig.elements()},
        "opens": [sorted(o) for o in space.opens],
    }
