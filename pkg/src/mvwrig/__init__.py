"""Workbench for finite MV-algebras equipped with a product.

Build structures from operation tables, formulas or the standard example
families; check every axiom exhaustively; compute ideal theory, quotients,
the prime spectrum with its co-Zariski topology, and the frame of
P-filters with its isomorphism onto the open-set lattice.
"""

from .builders import (
    build_luk_mv,
    build_matrix_rig,
    build_trivial,
    build_zn,
    direct_product,
    gamma_zk,
    lift_trivial_product,
    subalgebra_closure,
)
from .core import AxiomReport, Carrier, FiniteMvwRig, check_mv, check_mvw, derive
from .errors import MvwError

__all__ = [
    "AxiomReport",
    "Carrier",
    "FiniteMvwRig",
    "MvwError",
    "build_luk_mv",
    "build_matrix_rig",
    "build_trivial",
    "build_zn",
    "check_mv",
    "check_mvw",
    "derive",
    "direct_product",
    "gamma_zk",
    "lift_trivial_product",
    "subalgebra_closure",
]

__version__ = "0.1.0"
