from pathlib import Path

import pytest

from mvwrig import builders

ALGEBRAS_DIR = Path(__file__).resolve().parent.parent / "algebras"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def build_zoo():
    """Every shipped example structure, by name.

    All carriers stay at or below 16 elements so the exhaustive law suites
    remain cheap.
    """
    zoo = {
        "trivial": builders.build_trivial(),
        "Z1xZ1": builders.direct_product(
            [builders.build_zn(1), builders.build_zn(1)]).set_name("Z1xZ1"),
        "M2(Z1)": builders.build_matrix_rig(builders.build_zn(1), 2)[0],
        "G1": builders.gamma_zk(1, (1,)),
        "G2": builders.gamma_zk(2, (1, 1)),
        "G3": builders.gamma_zk(3, (1, 1, 1)),
        "G110": builders.gamma_zk(3, (1, 1, 0)),
    }
    for n in range(1, 7):
        zoo[f"Z{n}"] = builders.build_zn(n)
    for n in range(2, 6):
        zoo[f"L{n}"] = builders.build_luk_mv(n)
        zoo[f"T{n}"] = builders.lift_trivial_product(
            builders.build_luk_mv(n)).set_name(f"T{n}")
    return zoo


ZOO = build_zoo()


@pytest.fixture(scope="session")
def zoo():
    return ZOO


def zoo_items(predicate=None):
    items = ZOO.items()
    if predicate is not None:
        items = [(k, v) for k, v in items if predicate(v)]
    return [pytest.param(v, id=k) for k, v in items]


def golden_path(name: str) -> Path:
    return GOLDEN_DIR / name


def algebra_path(name: str) -> Path:
    return ALGEBRAS_DIR / name
