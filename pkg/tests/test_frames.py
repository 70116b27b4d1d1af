import itertools

import pytest

from mvwrig import frames, spectrum
from mvwrig.errors import EmptySeed, GateNotMet, NotACover

from conftest import ZOO


@pytest.fixture
def z3():
    return ZOO["Z3"]


@pytest.fixture
def square():
    return ZOO["Z1xZ1"]


def test_dotsum_closure(z3):
    assert sorted(frames.dotsum_closure(z3, 1)) == [0, 1, 2, 3]
    assert sorted(frames.dotsum_closure(z3, 0)) == [0]
    assert sorted(frames.dotsum_closure(z3, 3)) == [0, 3]


def test_is_filter_vs_pfilter(z3):
    assert frames.is_filter(z3, {2, 3}) == (True, None)
    ok, witness = frames.is_pfilter(z3, {2, 3})
    assert not ok
    # 1+1 = 2 is a dotted sum of 1 that lies in the set, yet 1 does not
    assert witness == ("dotted-sum", (1, 2))
    assert frames.is_pfilter(z3, {1, 2, 3}) == (True, None)
    assert frames.is_pfilter(z3, set(range(4)))[0]
    assert not frames.is_filter(z3, set())[0]


def test_pfilter_needs_product():
    with pytest.raises(GateNotMet):
        frames.dotsum_closure(ZOO["L3"], 1)


def test_pfilter_generated(z3):
    assert frames.pfilter_generated(z3, {3}).sorted_members() == (1, 2, 3)
    assert frames.pfilter_generated(z3, {1}).sorted_members() == (1, 2, 3)
    assert frames.pfilter_generated(z3, {0}).sorted_members() == (0, 1, 2, 3)
    with pytest.raises(EmptySeed):
        frames.pfilter_generated(z3, set())


def test_pfilter_formula_agrees_on_commutative(z3, square):
    for rig in (z3, square, ZOO["T3"]):
        for k in range(1, rig.size + 1):
            for seed in itertools.combinations(range(rig.size), k):
                assert frames.pfilter_by_formula(rig, seed) == \
                    frames.pfilter_generated(rig, seed).members


def test_principal_pfilters(z3):
    assert frames.principal_pfilter(z3, 0).sorted_members() == (0, 1, 2, 3)
    assert frames.principal_pfilter(z3, 3).sorted_members() == (1, 2, 3)
    assert frames.principal_pfilter(z3, 1).sorted_members() == (1, 2, 3)


def test_meet_and_join(z3):
    f1 = frames.principal_pfilter(z3, 1)
    f3 = frames.principal_pfilter(z3, 3)
    # F_1 meet F_3 = F_{1 v 3} = F_3 and F_1 join F_3 = F_{1.3} = F_3
    assert frames.pfilter_meet(f1, f3).members == \
        frames.principal_pfilter(z3, z3.join(1, 3)).members
    assert frames.pfilter_join(f1, f3).members == \
        frames.principal_pfilter(z3, z3.mul(1, 3)).members
    full = frames.PFilter(z3, frozenset(range(4)))
    assert frames.pfilter_meet(f1, full).members == f1.members


def test_frame_z3_is_two_chain(z3):
    fr = frames.frame(z3)
    assert [sorted(f) for f in fr.pfilters] == [[1, 2, 3], [0, 1, 2, 3]]
    assert fr.bottom == 0 and fr.top == 1
    assert fr.hasse_edges() == [(0, 1)]


def test_frame_trivial():
    fr = frames.frame(ZOO["trivial"])
    assert [sorted(f) for f in fr.pfilters] == [[0]]
    assert fr.bottom == fr.top == 0


def test_frame_square_matches_opens(square):
    fr = frames.frame(square)
    assert len(fr.pfilters) == 4
    space = spectrum.spec(square)
    assert len(space.opens) == len(fr.pfilters)


def test_frame_t3_collapses():
    # every element of the trivial-product chain squares to zero, so the
    # only P-filter is the whole carrier
    fr = frames.frame(ZOO["T3"])
    assert [sorted(f) for f in fr.pfilters] == [[0, 1, 2]]


def test_pfilter_decomposition_everywhere(z3, square):
    for rig in (z3, square, ZOO["T3"], ZOO["G110"]):
        fr = frames.frame(rig)
        prin = {a: frames.principal_pfilter(rig, a).members for a in rig.elements()}
        for f in fr.pfilters:
            assert set().union(*(prin[a] for a in f)) == set(f)


def test_theta_z3(z3):
    tm = frames.theta(z3)
    mapping = {tuple(sorted(o)): sorted(tm.frame.pfilters[i])
               for o, i in zip(tm.space.opens, tm.open_to_filter)}
    assert mapping[()] == [1, 2, 3]       # empty open -> F_u
    assert mapping[(0,)] == [0, 1, 2, 3]  # whole spectrum -> F_0


def test_theta_square(square):
    tm = frames.theta(square)
    assert len(tm.space.opens) == len(tm.frame.pfilters) == 4
    assert sorted(tm.open_to_filter) == [0, 1, 2, 3]


def test_theta_trivial():
    tm = frames.theta(ZOO["trivial"])
    assert len(tm.space.opens) == len(tm.frame.pfilters) == 1


def test_theta_gates():
    with pytest.raises(GateNotMet):
        frames.theta(ZOO["T3"])  # no unit


def test_finite_subcover_examples(z3, square):
    assert frames.finite_subcover(z3, [0]) == [0]
    assert frames.finite_subcover(square, [1, 2]) == [1, 2]
    with pytest.raises(NotACover):
        frames.finite_subcover(z3, [3])
    with pytest.raises(NotACover):
        frames.finite_subcover(z3, [])


def test_finite_subcover_zero_squaring_structure():
    # in the trivial-product chain the bottom P-filter is already the whole
    # carrier, so even the empty subfamily covers
    t3 = ZOO["T3"]
    assert frames.finite_subcover(t3, [1]) == []
    assert frames.finite_subcover(t3, []) == []


def test_finite_subcover_is_sound_for_all_basic_covers(square):
    fr = frames.frame(square)
    prin = {a: frames.principal_pfilter(square, a).members
            for a in square.elements()}
    full = frozenset(square.elements())
    for k in range(1, 5):
        for gens in itertools.combinations(range(4), k):
            join = fr.join_of(fr.index_of(prin[g]) for g in gens)
            if fr.pfilters[join] != full:
                with pytest.raises(NotACover):
                    frames.finite_subcover(square, list(gens))
                continue
            sub = frames.finite_subcover(square, list(gens))
            back = fr.join_of(fr.index_of(prin[g]) for g in sub) if sub else fr.bottom
            assert fr.pfilters[back] == full


def test_export_json_doc(square):
    fr = frames.frame(square)
    doc = frames.export_json_doc(fr)
    assert doc["pfilters"][0] == [3]
    assert doc["pfilters"][-1] == [0, 1, 2, 3]
    assert sorted(doc["hasse"]) == [[0, 1], [0, 2], [1, 3], [2, 3]]
