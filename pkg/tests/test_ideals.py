import itertools

import pytest

from mvwrig import ideals
from mvwrig.errors import (
    GateNotMet,
    NotACongruence,
    NotAHomomorphism,
    NotCommutative,
    Trivial,
)

from conftest import ZOO, zoo_items


@pytest.fixture
def z3():
    return ZOO["Z3"]


@pytest.fixture
def square(
):
    return ZOO["Z1xZ1"]


@pytest.fixture
def t3():
    return ZOO["T3"]


def test_is_ideal_examples(z3, square):
    assert ideals.is_ideal(z3, {0}) == (True, None)
    ok, witness = ideals.is_ideal(z3, {0, 1})
    assert not ok and witness == ("sum", (1, 1))
    assert ideals.is_ideal(z3, set(range(4)))[0]
    ok, witness = ideals.is_ideal(z3, {1})
    assert not ok and witness[0] == "zero"


def test_is_mv_ideal_does_not_need_absorption():
    l3 = ZOO["L3"]
    assert ideals.is_mv_ideal(l3, {0})[0]
    ok, witness = ideals.is_mv_ideal(l3, {0, 1})
    assert not ok and witness == ("sum", (1, 1))


def test_generated_ideal_examples(z3, t3):
    assert ideals.generated_ideal(z3, {1}).sorted_members() == (0, 1, 2, 3)
    assert ideals.generated_ideal(z3, set()).sorted_members() == (0,)
    assert ideals.generated_ideal(t3, {1}).sorted_members() == (0, 1, 2)


def test_generated_ideal_noncommutative_fallback():
    m = ZOO["M2(Z1)"]
    for k in (1, 2):
        for seed in itertools.combinations(range(m.size), k):
            gen = ideals.generated_ideal(m, seed)
            ok, witness = ideals.is_ideal(m, gen.members)
            assert ok, (seed, witness)


def test_enumerate_ideals_counts(z3, square):
    assert [i.sorted_members() for i in ideals.enumerate_ideals(z3)] == \
        [(0,), (0, 1, 2, 3)]
    assert [i.sorted_members() for i in ideals.enumerate_ideals(square)] == \
        [(0,), (0, 1), (0, 2), (0, 1, 2, 3)]
    triv = ZOO["trivial"]
    assert [i.sorted_members() for i in ideals.enumerate_ideals(triv)] == [(0,)]


@pytest.mark.parametrize("rig", zoo_items(lambda r: r.size <= 10))
def test_enumerate_matches_brute_force(rig):
    brute = set()
    for k in range(rig.size + 1):
        for cand in itertools.combinations(range(rig.size), k):
            if ideals.is_ideal(rig, set(cand))[0]:
                brute.add(frozenset(cand))
    assert brute == {i.members for i in ideals.enumerate_ideals(rig)}


def test_classify_examples(z3, square, t3):
    cls = ideals.classify_ideal(z3, ideals.Ideal(z3, frozenset({0})))
    assert cls.prime and cls.maximal and cls.proper
    cls = ideals.classify_ideal(square, ideals.Ideal(square, frozenset({0})))
    assert not cls.prime  # (0,1).(1,0) = (0,0)
    cls = ideals.classify_ideal(t3, ideals.Ideal(t3, frozenset({0})))
    assert not cls.prime and cls.maximal
    # the whole carrier satisfies the raw clauses vacuously but is improper
    full = ideals.Ideal(z3, frozenset(range(4)))
    cls = ideals.classify_ideal(z3, full)
    assert cls.prime and not cls.proper


def test_nilradical(z3, t3):
    assert ideals.nilradical(z3).sorted_members() == (0,)
    assert ideals.nilradical(t3).sorted_members() == (0, 1, 2)
    triv = ZOO["trivial"]
    assert ideals.nilradical(triv).sorted_members() == (0,)


def test_nilradical_gates():
    with pytest.raises(NotCommutative):
        ideals.nilradical(ZOO["M2(Z1)"])
    with pytest.raises(GateNotMet):
        ideals.nilradical(ZOO["L3"])


def test_is_nilpotent(t3, z3):
    assert all(ideals.is_nilpotent(t3, x) for x in range(3))
    assert [x for x in range(4) if ideals.is_nilpotent(z3, x)] == [0]


def test_radical_examples(z3, t3):
    zero = ideals.Ideal(z3, frozenset({0}))
    assert ideals.radical(z3, zero).sorted_members() == (0,)
    zero_t = ideals.Ideal(t3, frozenset({0}))
    # no proper primes exist, so the empty intersection is everything
    assert ideals.radical(t3, zero_t).sorted_members() == (0, 1, 2)
    full = ideals.Ideal(z3, frozenset(range(4)))
    assert ideals.radical(z3, full).sorted_members() == (0, 1, 2, 3)


def test_ideal_join_and_product(square):
    i1 = ideals.Ideal(square, frozenset({0, 1}))
    i2 = ideals.Ideal(square, frozenset({0, 2}))
    assert ideals.ideal_join(square, i1, i2).sorted_members() == (0, 1, 2, 3)
    assert ideals.ideal_product(square, i1, i2).sorted_members() == (0,)
    zero = ideals.Ideal(square, frozenset({0}))
    assert ideals.ideal_join(square, i1, zero).members == i1.members


def test_congruence_from_ideal_identity(z3):
    cong = ideals.congruence_from_ideal(z3, ideals.Ideal(z3, frozenset({0})))
    assert cong.class_of == (0, 1, 2, 3)


def test_congruence_from_full_ideal(z3):
    cong = ideals.congruence_from_ideal(z3, ideals.Ideal(z3, frozenset(range(4))))
    assert cong.class_of == (0, 0, 0, 0)


def test_congruence_roundtrip_t3(t3):
    full = ideals.Ideal(t3, frozenset(range(3)))
    cong = ideals.congruence_from_ideal(t3, full)
    assert len(set(cong.class_of)) == 1
    assert ideals.ideal_from_congruence(t3, cong).members == full.members


def test_bad_partition_rejected(z3):
    with pytest.raises(NotACongruence) as exc:
        ideals.ideal_from_congruence(z3, (0, 0, 1, 1))
    assert exc.value.clause in ("neg", "add", "mul")


def test_quotient_examples(z3, square):
    q = ideals.quotient(z3, ideals.Ideal(z3, frozenset({0})))
    assert q.rig.same_tables(z3)
    q = ideals.quotient(z3, ideals.Ideal(z3, frozenset(range(4))))
    assert q.rig.size == 1
    q = ideals.quotient(square, ideals.Ideal(square, frozenset({0, 1})))
    assert q.rig.same_tables(ZOO["Z1"])
    assert q.projection == (0, 0, 1, 1)


def test_check_homomorphism_examples(z3, square):
    z1 = ZOO["Z1"]
    proj = ideals.Homomorphism(square, z1, (0, 0, 1, 1))
    assert ideals.check_homomorphism(proj) == (True, None)
    assert ideals.kernel(proj).sorted_members() == (0, 1)
    ident = ideals.Homomorphism(z3, z3, (0, 1, 2, 3))
    assert ideals.kernel(ident).sorted_members() == (0,)
    swap = ideals.Homomorphism(z3, z3, (0, 2, 1, 3))
    ok, witness = ideals.check_homomorphism(swap)
    assert not ok and witness == ("add", (1, 1))
    with pytest.raises(NotAHomomorphism):
        ideals.verify_homomorphism(swap)


def test_image_is_substructure(z3):
    f = ideals.Homomorphism(z3, z3, (0, 1, 2, 3))
    img, embedding = ideals.image(f)
    assert img.same_tables(z3)
    inc = ideals.Homomorphism(ZOO["G1"], z3, (0, 3))
    ok, _ = ideals.check_homomorphism(inc)
    assert ok
    img, embedding = ideals.image(inc)
    assert embedding == (0, 3)


def test_mixed_homomorphism_kernel_and_image():
    # a homomorphism of the underlying MV-algebras from a product-free
    # chain into a structure with a product: the image lands in the
    # target's MV-reduct and the kernel is only required to be an MV-ideal
    l2 = ZOO["L2"]
    z3 = ZOO["Z3"]
    f = ideals.Homomorphism(l2, z3, (0, 3))
    ok, witness = ideals.check_homomorphism(f)
    assert ok, witness
    assert ideals.kernel(f).sorted_members() == (0,)
    img, embedding = ideals.image(f)
    assert img.mv_only and embedding == (0, 3)
    fi = ideals.first_iso(f)
    assert fi.image_rig.size == 2


def test_enumerate_homomorphisms_pairs():
    z1 = ZOO["Z1"]
    square = ZOO["Z1xZ1"]
    homs = ideals.enumerate_homomorphisms(square, z1)
    # two coordinate projections, the zero map is not one (u must map to u)
    maps = {h.mapping for h in homs}
    assert (0, 0, 1, 1) in maps and (0, 1, 0, 1) in maps
    for h in homs:
        assert h.mapping[square.u] == z1.u


def test_first_iso_cases(z3, square):
    z1 = ZOO["Z1"]
    fi = ideals.first_iso(ideals.Homomorphism(square, z1, (0, 0, 1, 1)))
    assert fi.quot.rig.size == 2 and fi.image_rig.size == 2
    fi = ideals.first_iso(ideals.Homomorphism(z3, z3, (0, 1, 2, 3)))
    assert fi.quot.rig.same_tables(z3)
    triv = ZOO["trivial"]
    fi = ideals.first_iso(ideals.Homomorphism(z3, triv, (0, 0, 0, 0)))
    assert fi.quot.rig.size == 1


def test_ideal_correspondence_cases(square):
    i1 = ideals.Ideal(square, frozenset({0, 1}))
    pairs = ideals.ideal_correspondence(square, i1)
    assert len(pairs) == 2
    zero = ideals.Ideal(square, frozenset({0}))
    pairs = ideals.ideal_correspondence(square, zero)
    assert len(pairs) == len(ideals.enumerate_ideals(square))
    full = ideals.Ideal(square, frozenset(range(4)))
    assert len(ideals.ideal_correspondence(square, full)) == 1


def test_chang_embedding_square(square):
    ch = ideals.chang_embedding(square)
    assert [p.sorted_members() for p in ch.primes] == [(0, 1), (0, 2)]
    assert all(q.rig.size == 2 for q in ch.quotients)
    assert len(set(ch.mapping)) == square.size


def test_chang_embedding_chain_is_identity():
    l3 = ZOO["L3"]
    ch = ideals.chang_embedding(l3)
    assert [p.sorted_members() for p in ch.primes] == [(0,)]
    assert ch.mapping == (0, 1, 2)
    z3 = ZOO["Z3"]
    ch = ideals.chang_embedding(z3)
    assert ch.mapping == (0, 1, 2, 3)


def test_chang_embedding_trivial_rejected():
    with pytest.raises(Trivial):
        ideals.chang_embedding(ZOO["trivial"])


def test_maximal_ideals_examples(z3, square, t3):
    assert [m.sorted_members() for m in ideals.maximal_ideals(z3)] == [(0,)]
    assert [m.sorted_members() for m in ideals.maximal_ideals(square)] == \
        [(0, 1), (0, 2)]
    assert [m.sorted_members() for m in ideals.maximal_ideals(t3)] == [(0,)]
    with pytest.raises(Trivial):
        ideals.maximal_ideals(ZOO["trivial"])


def test_preimage_of_prime_is_prime():
    # checked across every homomorphism between small example pairs
    small = [r for r in ZOO.values() if r.size <= 4 and r.mul_table is not None]
    for a in small:
        for b in small:
            for f in ideals.enumerate_homomorphisms(a, b):
                for p in ideals.prime_ideals(b):
                    pre = frozenset(x for x in a.elements()
                                    if f.mapping[x] in p.members)
                    if len(pre) == a.size:
                        continue
                    cls = ideals.classify_ideal(a, ideals.Ideal(a, pre))
                    assert ideals.is_ideal(a, pre)[0]
                    assert cls.prime, (a.name, b.name, f.mapping, sorted(p.members))
