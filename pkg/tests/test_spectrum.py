import pytest

from mvwrig import builders, ideals, spectrum
from mvwrig.errors import GateNotMet, NotCommutative

from conftest import ZOO


@pytest.fixture
def sz3():
    return spectrum.spec(ZOO["Z3"])


@pytest.fixture
def ssq():
    return spectrum.spec(ZOO["Z1xZ1"])


def test_spec_z3_single_point(sz3):
    assert [sorted(p) for p in sz3.points] == [[0]]
    assert [sorted(o) for o in sz3.opens] == [[], [0]]
    assert not sz3.unit_gated


def test_spec_square_two_points(ssq):
    assert [sorted(p) for p in ssq.points] == [[0, 1], [0, 2]]
    assert len(ssq.opens) == 4
    assert sorted(ssq.base[1]) == [0]
    assert sorted(ssq.base[2]) == [1]
    assert ssq.base[0] == ssq.all_points
    assert ssq.base[3] == frozenset()


def test_spec_t3_empty_and_gated():
    st = spectrum.spec(ZOO["T3"])
    assert st.points == ()
    assert st.unit_gated
    assert st.warnings


def test_spec_gates():
    with pytest.raises(NotCommutative):
        spectrum.spec(ZOO["M2(Z1)"])
    with pytest.raises(GateNotMet):
        spectrum.spec(ZOO["L3"])


def test_basic_open(ssq):
    assert spectrum.basic_open(ssq, 0) == ssq.all_points
    assert spectrum.basic_open(ssq, ssq.rig.u) == frozenset()
    assert sorted(spectrum.basic_open(ssq, 1)) == [0]


def test_t0(sz3, ssq):
    assert spectrum.is_t0(sz3)
    assert spectrum.is_t0(ssq)


def test_irreducible(sz3, ssq):
    assert spectrum.is_irreducible(sz3)
    assert not spectrum.is_irreducible(ssq)
    # witness: the two nonempty basic opens are disjoint
    assert ssq.base[1] & ssq.base[2] == frozenset()
    st = spectrum.spec(ZOO["T3"])
    assert not spectrum.is_irreducible(st)


def test_point_closure(ssq, sz3):
    assert spectrum.point_closure(ssq, 0) == frozenset({0})
    assert spectrum.point_closure(ssq, 1) == frozenset({1})
    assert spectrum.point_closure(sz3, 0) == frozenset({0})
    assert spectrum.set_closure(ssq, set()) == frozenset()
    assert spectrum.set_closure(ssq, {0, 1}) == frozenset({0, 1})


def test_spec_map_projection(ssq):
    z1 = ZOO["Z1"]
    square = ZOO["Z1xZ1"]
    f = ideals.Homomorphism(square, z1, (0, 0, 1, 1))
    phi = spectrum.spec_map(f, spec_a=ssq)
    # the single point of Spec(Z1) pulls back to the kernel {(0,0),(0,1)}
    assert len(phi.mapping) == 1
    assert sorted(ssq.points[phi.mapping[0]]) == [0, 1]


def test_spec_map_identity(sz3):
    z3 = ZOO["Z3"]
    f = ideals.Homomorphism(z3, z3, tuple(range(4)))
    phi = spectrum.spec_map(f, spec_a=sz3, spec_b=sz3)
    assert phi.mapping == (0,)


def test_spec_map_subalgebra_inclusion(sz3):
    z3 = ZOO["Z3"]
    sub, embedding = builders.subalgebra_closure(z3, {3})
    f = ideals.Homomorphism(sub, z3, embedding)
    phi = spectrum.spec_map(f, spec_a=spectrum.spec(sub), spec_b=sz3)
    assert phi.mapping == (0,)


def test_radical_order_check(sz3, ssq):
    # V(b) is always contained in V(0)
    for b in range(4):
        assert spectrum.radical_order_check(sz3, b, 0)
    assert spectrum.radical_order_check(sz3, 2, 2)
    assert not spectrum.radical_order_check(ssq, 1, 2)
    assert not spectrum.radical_order_check(ssq, 2, 1)


def test_covering_edges_transitive_reduction():
    sets = [frozenset(), frozenset({1}), frozenset({1, 2}), frozenset({3})]
    edges = spectrum.covering_edges(sets)
    assert (0, 1) in edges and (1, 2) in edges
    assert (0, 2) not in edges  # transitively implied
    assert (0, 3) in edges


def test_export_dot(sz3, ssq):
    dot = spectrum.export_dot(sz3)
    assert 'p0 [label="{0}"]' in dot
    assert "->" not in dot
    dot = spectrum.export_dot(ssq)
    assert dot.count("label=") == 2
    empty = spectrum.spec(ZOO["T3"])
    assert spectrum.export_dot(empty).count("label=") == 0


def test_export_json(ssq):
    doc = spectrum.export_json_doc(ssq)
    assert doc["points"] == [[0, 1], [0, 2]]
    assert doc["base"]["0"] == [0, 1]
    assert doc["base"]["3"] == []
    assert [sorted(o) for o in doc["opens"]] == [[], [0], [1], [0, 1]]


def test_spec_map_rejects_non_homomorphism():
    z3 = ZOO["Z3"]
    from mvwrig.errors import NotAHomomorphism
    with pytest.raises(NotAHomomorphism):
        spectrum.spec_map(ideals.Homomorphism(z3, z3, (0, 2, 1, 3)))
