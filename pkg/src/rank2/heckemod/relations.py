"""Exact verification of the defining relations on a module."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..rootdata import RootSystem, enumerate_weyl
from . import linalg as la
from .module import ModuleRep

RANDOM_SEED = 20240531


@dataclass
class RelationReport:
    checked: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool) -> None:
        self.checked.append(name)
        if not passed:
            self.failures.append(name)


def lattice_samples(rs: RootSystem) -> list[tuple[int, ...]]:
    """omega's, alpha's and three seeded random lattice vectors in [-3, 3]."""
    n = rs.rank
    out = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    out += [tuple(r) for r in rs.simple_in_omega]
    rng = random.Random(RANDOM_SEED + n)
    out += [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(3)]
    return out


def _alternating(a, b, m: int, dim: int):
    out = la.identity(dim)
    for k in range(m):
        out = la.matmul(out, a if k % 2 == 0 else b)
    return out


def bernstein_correction(rs: RootSystem, m: ModuleRep, lam: tuple[int, ...], i: int):
    """(X^lam - X^{s_i lam}) / (1 - X^{-alpha_i}) as a finite sum of X-powers."""
    n = lam[i - 1]
    a = rs.simple_in_omega[i - 1]
    out = la.zeros(m.dim, m.dim)
    if n > 0:
        for k in range(n):
            out = la.add(out, m.x_power(tuple(l - k * x for l, x in zip(lam, a))))
    elif n < 0:
        for k in range(1, -n + 1):
            out = la.sub(out, m.x_power(tuple(l + k * x for l, x in zip(lam, a))))
    return out


def check_relations(rs: RootSystem, m: ModuleRep) -> RelationReport:
    memo = m._cache.get("relations")
    if memo is not None:
        return memo
    rep = RelationReport()
    dim = m.dim
    I = la.identity(dim)
    qd = m.ctx.qdiff
    for i in rs.indices:
        Ti = m.T[i - 1]
        lhs = la.matmul(Ti, Ti)
        rhs = la.add(la.scale(qd, Ti), I)
        rep.record(f"quadratic T{i}", la.mat_eq(lhs, rhs))
    for i in rs.indices:
        for j in rs.indices:
            if i < j:
                mij = rs.braid_order(i, j)
                a = _alternating(m.T[i - 1], m.T[j - 1], mij, dim)
                b = _alternating(m.T[j - 1], m.T[i - 1], mij, dim)
                rep.record(f"braid T{i},T{j} (m={mij})", la.mat_eq(a, b))
    for i in range(rs.rank):
        rep.record(f"X{i + 1} invertible", la.mat_eq(la.matmul(m.X[i], m.Xinv[i]), I))
        for j in range(i + 1, rs.rank):
            rep.record(
                f"X{i + 1}X{j + 1} commute",
                la.mat_eq(la.matmul(m.X[i], m.X[j]), la.matmul(m.X[j], m.X[i])),
            )
    for lam in lattice_samples(rs):
        for i in rs.indices:
            si_lam = rs.element((i,)).act(lam)
            xl, xs = m.x_power(lam), m.x_power(si_lam)
            Ti = m.T[i - 1]
            lhs = la.sub(la.matmul(xl, Ti), la.matmul(Ti, xs))
            corr = la.scale(qd, bernstein_correction(rs, m, lam, i))
            ok = la.mat_eq(lhs, corr)
            # the same identity with the denominator cleared
            neg_alpha = tuple(-x for x in rs.simple_in_omega[i - 1])
            den = la.sub(I, m.x_power(neg_alpha))
            ok = ok and la.mat_eq(la.matmul(lhs, den), la.scale(qd, la.sub(xl, xs)))
            rep.record(f"Bernstein lam={lam} i={i}", ok)
    om1 = tuple(int(j == 0) for j in range(rs.rank))
    z = la.zeros(dim, dim)
    for w in enumerate_weyl(rs):
        z = la.add(z, m.x_power(w.act(om1)))
    rep.record("center sum_w X^{w omega_1} scalar", la.is_scalar(z))
    m._cache["relations"] = rep
    return rep
