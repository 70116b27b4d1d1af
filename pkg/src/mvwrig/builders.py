"""Constructors for the standard example families.

Every builder pushes its output through the exhaustive axiom checker
instead of trusting the construction; the matrix builder returns the
product-axiom report alongside the structure because not every base
yields a lawful product.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

import numpy as np

from . import core
from .core import FiniteMvwRig, derive
from .errors import (
    AxiomViolation,
    ClosureViolation,
    InvalidUnit,
    SizeBound,
)

#: Matrix and product carriers are capped so the cubic axiom scans stay cheap.
DEFAULT_SIZE_BOUND = 4096


def size_bound() -> int:
    """The carrier-size cap; MVW_SIZE_BOUND overrides the default."""
    return int(os.environ.get("MVW_SIZE_BOUND", DEFAULT_SIZE_BOUND))


def _checked(rig: FiniteMvwRig, mv_only=False) -> FiniteMvwRig:
    report = core.check_mv(rig)
    if not report.passed:
        raise AxiomViolation(report, context=rig.name)
    if not mv_only and rig.mul_table is not None:
        report = core.check_mvw(rig)
        if not report.passed:
            raise AxiomViolation(report, context=rig.name)
    return rig


def build_zn(n: int) -> FiniteMvwRig:
    """The rig {0, .., n} with x+y = min(n, x+y), neg x = n-x,
    xy = min(n, x*y).  Has unit 1, distinct from the top when n > 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n + 1)
    neg = n - idx
    add = np.minimum(n, idx[:, None] + idx[None, :])
    mul = np.minimum(n, idx[:, None] * idx[None, :])
    rig = derive(neg, add, mul, name=f"Z{n}")
    return _checked(rig)


def luk_values(n: int) -> list[Fraction]:
    """The n-point rational grid 0, 1/(n-1), .., 1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return [Fraction(i, n - 1) for i in range(n)]


def build_luk_mv(n: int) -> FiniteMvwRig:
    """The n-valued chain on {0, 1/(n-1), .., 1} with truncated sum and
    neg x = 1-x.  Product-free: the rational grid is not closed under the
    real product (see attach_real_product)."""
    values = luk_values(n)
    names = tuple(str(v) for v in values)
    idx = np.arange(n)
    neg = (n - 1) - idx
    add = np.minimum(n - 1, idx[:, None] + idx[None, :])
    rig = derive(neg, add, None, names=names, name=f"L{n}")
    return _checked(rig, mv_only=True)


def attach_real_product(n: int) -> FiniteMvwRig:
    """Equip the n-valued chain with the actual rational product.

    Raises ClosureViolation with the first witness pair whose product
    leaves the grid; only n = 2 survives.  Arithmetic is exact.
    """
    values = luk_values(n)
    index = {v: i for i, v in enumerate(values)}
    mul = [[0] * n for _ in range(n)]
    for i, x in enumerate(values):
        for j, y in enumerate(values):
            p = x * y
            if p not in index:
                raise ClosureViolation("mul", (x, y), p)
            mul[i][j] = index[p]
    base = build_luk_mv(n)
    rig = derive(base.neg_table, base.add_table, mul,
                 names=base.carrier.names, name=f"L{n}*")
    return _checked(rig)


def lift_trivial_product(mv: FiniteMvwRig) -> FiniteMvwRig:
    """Attach the constant-zero product; the product axioms then hold
    vacuously (every instance reduces to 0 <= 0)."""
    n = mv.size
    mul = np.zeros((n, n), dtype=np.int32)
    rig = derive(mv.neg_table, mv.add_table, mul,
                 names=mv.carrier.names, name=f"T({mv.name})")
    return _checked(rig)


def build_matrix_rig(base: FiniteMvwRig, n: int, bound: int | None = None):
    """Square n x n matrices over a finite base rig.

    Sum and negation are componentwise; the product is the truncated
    matrix product whose (i, j) entry is the base-sum over k of
    a[i,k].b[k,j].  Returns (rig, product_report): associativity can fail
    for some bases, so the product axioms are reported, not assumed.
    """
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    if base.mul_table is None:
        raise ValueError("base must have a product")
    bound = size_bound() if bound is None else bound
    size = base.size ** (n * n)
    if size > bound:
        raise SizeBound(f"matrix carrier would have {size} elements (bound {bound})")

    cells = n * n
    elems = list(itertools.product(range(base.size), repeat=cells))
    index = {e: i for i, e in enumerate(elems)}
    bneg, badd, bmul = base.neg_table, base.add_table, base.mul_table

    def mat_name(e):
        rows = []
        for i in range(n):
            row = ",".join(base.element_name(e[i * n + j]) for j in range(n))
            rows.append(f"[{row}]")
        return "[" + ",".join(rows) + "]"

    neg = [index[tuple(int(bneg[c]) for c in e)] for e in elems]
    add = [[index[tuple(int(badd[a, b]) for a, b in zip(e, f))] for f in elems]
           for e in elems]

    def mat_mul(e, f):
        out = []
        for i in range(n):
            for j in range(n):
                acc = int(bmul[e[i * n + 0], f[0 * n + j]])
                for k in range(1, n):
                    acc = int(badd[acc, bmul[e[i * n + k], f[k * n + j]]])
                out.append(acc)
        return tuple(out)

    mul = [[index[mat_mul(e, f)] for f in elems] for e in elems]
    names = tuple(mat_name(e) for e in elems)
    rig = derive(neg, add, mul, names=names, name=f"M{n}({base.name})")
    report = core.check_mv(rig)
    if not report.passed:
        raise AxiomViolation(report, context=rig.name)
    return rig, core.check_mvw(rig)


def _product2(a: FiniteMvwRig, b: FiniteMvwRig, name: str) -> FiniteMvwRig:
    sa, sb = a.size, b.size

    def combine(ta, tb):
        return (ta[:, None, :, None] * sb + tb[None, :, None, :]).reshape(sa * sb, sa * sb)

    neg = (a.neg_table[:, None] * sb + b.neg_table[None, :]).reshape(sa * sb)
    add = combine(a.add_table, b.add_table)
    mul = None
    if a.mul_table is not None and b.mul_table is not None:
        mul = combine(a.mul_table, b.mul_table)
    names = tuple(f"({a.element_name(i)},{b.element_name(j)})"
                  for i in range(sa) for j in range(sb))
    return derive(neg, add, mul, names=names, name=name)


def direct_product(rigs, bound: int | None = None) -> FiniteMvwRig:
    """Componentwise product of finitely many structures.

    The result carries a product only when every factor does.
    """
    rigs = list(rigs)
    if not rigs:
        raise ValueError("need at least one factor")
    bound = size_bound() if bound is None else bound
    size = 1
    for r in rigs:
        size *= r.size
    if size > bound:
        raise SizeBound(f"product carrier would have {size} elements (bound {bound})")
    acc = rigs[0]
    for r in rigs[1:]:
        acc = _product2(acc, r, name=f"{acc.name}x{r.name}")
    mv_only = any(r.mul_table is None for r in rigs)
    return _checked(acc, mv_only=mv_only)


def gamma_zk(k: int, u, bound: int | None = None) -> FiniteMvwRig:
    """The interval [0, u] of Z^k under the componentwise order, with the
    truncated sum (x+y) meet u and the componentwise integer product.

    The requirement u.u <= u forces every coordinate of u into {0, 1}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    u = tuple(int(c) for c in u)
    if len(u) != k:
        raise ValueError(f"unit vector must have length {k}")
    if any(c not in (0, 1) for c in u):
        raise InvalidUnit(f"unit vector entries must be 0 or 1, got {u}")
    bound = size_bound() if bound is None else bound
    size = 1
    for c in u:
        size *= c + 1
    if size > bound:
        raise SizeBound(f"interval carrier would have {size} elements (bound {bound})")

    elems = list(itertools.product(*[range(c + 1) for c in u]))
    index = {e: i for i, e in enumerate(elems)}

    def vec_name(e):
        return str(e[0]) if k == 1 else "(" + ",".join(str(c) for c in e) + ")"

    neg = [index[tuple(uc - xc for uc, xc in zip(u, e))] for e in elems]
    add = [[index[tuple(min(xc + yc, uc) for xc, yc, uc in zip(e, f, u))]
            for f in elems] for e in elems]
    mul = [[index[tuple(xc * yc for xc, yc in zip(e, f))] for f in elems]
           for e in elems]
    names = tuple(vec_name(e) for e in elems)
    uname = "".join(str(c) for c in u)
    rig = derive(neg, add, mul, names=names, name=f"G{k}_{uname}")
    return _checked(rig)


def build_trivial() -> FiniteMvwRig:
    """The one-element structure: every table is constant 0 and u = 0."""
    return gamma_zk(1, (0,)).set_name("0")


def subalgebra_closure(rig: FiniteMvwRig, seed):
    """Least subset containing the seed and 0, closed under all operations,
    returned as a structure with its inclusion into the parent."""
    members = {0} | {rig._check(a) for a in seed}
    while True:
        fresh = set()
        for a in members:
            fresh.add(rig.neg(a))
            for b in members:
                fresh.add(rig.add(a, b))
                if rig.mul_table is not None:
                    fresh.add(rig.mul(a, b))
                    fresh.add(rig.mul(b, a))
        if fresh <= members:
            break
        members |= fresh
    sub, embedding = core.restrict(rig, members)
    return sub.set_name(f"{rig.name}|sub"), embedding
