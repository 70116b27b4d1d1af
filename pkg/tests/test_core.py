import pytest

from mvwrig import builders, core
from mvwrig.errors import GateNotMet, OrderNotAntisymmetric

from conftest import zoo_items

Z3_NEG = [3, 2, 1, 0]
Z3_ADD = [[min(3, x + y) for y in range(4)] for x in range(4)]
Z3_MUL = [[min(3, x * y) for y in range(4)] for x in range(4)]


@pytest.fixture
def z3():
    return core.derive(Z3_NEG, Z3_ADD, Z3_MUL, name="Z3")


def test_derive_z3_order_is_usual(z3):
    for x in range(4):
        for y in range(4):
            assert z3.leq(x, y) == (x <= y)


def test_derive_monus_by_hand(z3):
    # monus(2, 1) evaluated by direct table lookups: neg(add(neg(2), 1))
    assert Z3_NEG[Z3_ADD[Z3_NEG[2]][1]] == 1
    assert z3.monus(2, 1) == 1


def test_derive_times_mv(z3):
    assert z3.times_mv(2, 2) == Z3_NEG[Z3_ADD[Z3_NEG[2]][Z3_NEG[2]]] == 1


def test_derive_trivial():
    rig = core.derive([0], [[0]], [[0]])
    assert rig.u == 0
    assert rig.size == 1
    assert core.check_mv(rig).passed


def test_derive_rejects_non_antisymmetric_order():
    with pytest.raises(OrderNotAntisymmetric) as exc:
        core.derive([3, 3, 1, 0], Z3_ADD, Z3_MUL)
    x, y = exc.value.witness
    assert x != y


def test_derive_validates_tables():
    with pytest.raises(ValueError):
        core.derive([4, 2, 1, 0], Z3_ADD, Z3_MUL)
    with pytest.raises(ValueError):
        core.derive([3, 2, 1], Z3_ADD, Z3_MUL)


def test_check_mv_passes_on_z3(z3):
    report = core.check_mv(z3)
    assert report.passed
    assert report.failed_axioms() == []


def test_check_mv_corrupted_neg_fails_mv5():
    # one corrupted entry (neg(1) = 1): the order stays antisymmetric, so
    # derivation succeeds and the axiom scan must pin the damage on MV5
    rig = core.derive([3, 1, 1, 0], Z3_ADD, Z3_MUL)
    report = core.check_mv(rig)
    assert not report.passed
    assert report.status("MV5") == "FAIL"
    assert (2,) in report.witnesses("MV5")


def test_mutate_and_check_every_neg_entry():
    # mutating any single negation entry is always caught, either at
    # derivation or by the axiom scan
    for pos in range(4):
        for val in range(4):
            if val == Z3_NEG[pos]:
                continue
            neg = list(Z3_NEG)
            neg[pos] = val
            try:
                rig = core.derive(neg, Z3_ADD, Z3_MUL)
            except OrderNotAntisymmetric:
                continue
            assert not core.check_mv(rig).passed


def test_check_mvw_passes_on_z3(z3):
    assert core.check_mvw(z3).passed


def test_check_mvw_needs_product():
    mv = builders.build_luk_mv(3)
    with pytest.raises(GateNotMet):
        core.check_mvw(mv)


def test_check_mvw_trivial_product_lift():
    t3 = builders.lift_trivial_product(builders.build_luk_mv(3))
    assert core.check_mvw(t3).passed


def test_check_mvw_catches_zero_absorption():
    mul = [row[:] for row in Z3_MUL]
    mul[0][1] = 1
    rig = core.derive(Z3_NEG, Z3_ADD, mul)
    report = core.check_mvw(rig)
    assert report.status("MVW-iii") == "FAIL"
    assert (0, 1) in report.witnesses("MVW-iii")


def test_structural_flags_z3(z3):
    flags = core.structural_flags(z3)
    assert flags["commutative"] is True
    assert flags["unit"] == 1
    assert flags["product_below_meet"] is False
    assert z3.mul(2, 2) == 3 and z3.meet(2, 2) == 2  # the witness
    assert flags["u"] == 3


def test_structural_flags_trivial_lift():
    t3 = builders.lift_trivial_product(builders.build_luk_mv(3))
    flags = core.structural_flags(t3)
    assert flags["commutative"] is True
    assert flags["unit"] is None
    assert flags["product_below_meet"] is True


def test_structural_flags_one_element():
    rig = core.derive([0], [[0]], [[0]])
    flags = core.structural_flags(rig)
    assert flags["unit"] == 0
    assert flags["commutative"] and flags["product_below_meet"]


def test_power(z3):
    assert z3.power(2, 2) == 3
    assert z3.power(2, 1) == 2
    for n in range(1, 5):
        assert z3.power(0, n) == 0
    with pytest.raises(ValueError):
        z3.power(2, 0)


def test_power_trivial_product():
    t3 = builders.lift_trivial_product(builders.build_luk_mv(3))
    assert t3.power(1, 2) == 0


def test_accessors(z3):
    assert z3.join(1, 2) == 2
    assert z3.meet(1, 2) == 1
    for x in range(4):
        assert z3.meet(x, 0) == 0
        assert z3.join(x, 3) == 3
    with pytest.raises(IndexError):
        z3.join(1, 4)
    with pytest.raises(IndexError):
        z3.neg(-1)


def test_same_tables(z3):
    other = core.derive(Z3_NEG, Z3_ADD, Z3_MUL, name="other")
    assert z3.same_tables(other)
    assert not z3.same_tables(builders.build_zn(2))


def test_restrict_closed_subset(z3):
    sub, embedding = core.restrict(z3, {0, 3})
    assert embedding == (0, 3)
    assert sub.size == 2
    assert sub.u == 1
    with pytest.raises(ValueError):
        core.restrict(z3, {0, 1})  # 1 + 1 = 2 escapes
    with pytest.raises(ValueError):
        core.restrict(z3, {1, 3})  # missing zero


@pytest.mark.parametrize("rig", zoo_items())
def test_zoo_passes_axioms(rig):
    assert core.check_mv(rig).passed
    if rig.mul_table is not None:
        assert core.check_mvw(rig).passed


@pytest.mark.parametrize("rig", zoo_items())
def test_join_meet_agree_with_order(rig):
    # the derived join/meet tables are genuine least upper/greatest lower
    # bounds of the derived order
    leq = rig.leq_table
    for x in range(rig.size):
        for y in range(rig.size):
            j, m = rig.join(x, y), rig.meet(x, y)
            assert leq[x, j] and leq[y, j]
            assert leq[m, x] and leq[m, y]
            for z in range(rig.size):
                if leq[x, z] and leq[y, z]:
                    assert leq[j, z]
                if leq[z, x] and leq[z, y]:
                    assert leq[z, m]
