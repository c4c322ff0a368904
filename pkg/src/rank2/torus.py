"""Monomial-valued torus weights, Weyl orbits, P(t)/Z(t) and radial exponents."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootdata import RootSystem, Vec, WeylElement, enumerate_weyl, inverse
from .scalars import FieldContext, Monomial


@dataclass(frozen=True)
class TorusWeight:
    """A character of the weight lattice, pinned by its values on the omega_i."""

    omega_values: tuple[Monomial, ...]

    @property
    def n(self) -> int:
        return self.omega_values[0].n

    def __call__(self, lam: Sequence[int]) -> Monomial:
        return eval_weight(self, lam)

    def to_pairs(self) -> list[list[int]]:
        return [[m.zeta_pow, m.v_pow] for m in self.omega_values]

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.omega_values) + ")"


def eval_weight(t: TorusWeight, lam: Sequence[int]) -> Monomial:
    """t(X^lam) for lam in omega coordinates."""
    z = v = 0
    for m, c in zip(t.omega_values, lam):
        z += m.zeta_pow * c
        v += m.v_pow * c
    return Monomial(z, v, t.n)


def eval_root(rs: RootSystem, t: TorusWeight, beta: Sequence[int]) -> Monomial:
    """t(X^beta) for beta in alpha coordinates."""
    return eval_weight(t, rs.alpha_to_omega(beta))


def from_alpha_values(rs: RootSystem, alpha_values: Sequence[Monomial]) -> TorusWeight:
    """The weight whose omega-values are the exponent-wise rational combination.

    Raises ``ValueError`` when the combination is not integral; in that case
    a lift has to be chosen by hand and passed as omega-values.
    """
    inv = rs.omega_in_alpha
    n = alpha_values[0].n
    out = []
    for i in range(rs.rank):
        z = sum(inv[i][j] * alpha_values[j].zeta_pow for j in range(rs.rank))
        v = sum(inv[i][j] * alpha_values[j].v_pow for j in range(rs.rank))
        if Fraction(z).denominator != 1 or Fraction(v).denominator != 1:
            raise ValueError("alpha-values admit no integral omega lift; specify omega-values")
        out.append(Monomial(int(z), int(v), n))
    return TorusWeight(tuple(out))


def w_action(rs: RootSystem, w: WeylElement, t: TorusWeight) -> TorusWeight:
    """(wt)(X^lam) = t(X^{w^{-1} lam})."""
    winv = inverse(rs, w)
    vals = []
    for i in range(rs.rank):
        om = tuple(int(j == i) for j in range(rs.rank))
        vals.append(eval_weight(t, winv.act(om)))
    return TorusWeight(tuple(vals))


def pz_sets(rs: RootSystem, t: TorusWeight, ctx: FieldContext) -> tuple[frozenset[Vec], frozenset[Vec]]:
    q2, qm2 = ctx.q_mono(2), ctx.q_mono(-2)
    P, Z = set(), set()
    for beta in rs.positive_roots:
        val = eval_root(rs, t, beta)
        if val == q2 or val == qm2:
            P.add(beta)
        elif val.is_one():
            Z.add(beta)
    return frozenset(P), frozenset(Z)


@dataclass(frozen=True)
class OrbitPoint:
    weight: TorusWeight
    elements: tuple[WeylElement, ...]  # all w with w t = weight, shortlex order

    @property
    def rep(self) -> WeylElement:
        return self.elements[0]


def orbit(rs: RootSystem, t: TorusWeight) -> tuple[OrbitPoint, ...]:
    """Distinct points of W t ordered by their shortlex-least representative."""
    groups: dict[TorusWeight, list[WeylElement]] = {}
    for w in enumerate_weyl(rs):
        groups.setdefault(w_action(rs, w, t), []).append(w)
    pts = [OrbitPoint(wt, tuple(ws)) for wt, ws in groups.items()]
    return tuple(sorted(pts, key=lambda p: (p.rep.length, p.rep.word)))


def stabilizer(rs: RootSystem, t: TorusWeight) -> tuple[WeylElement, ...]:
    return tuple(w for w in enumerate_weyl(rs) if w_action(rs, w, t) == t)


def nu_exponents(t: TorusWeight, ctx: FieldContext) -> tuple[Fraction, ...]:
    """<omega_i, nu(t)> = v_pow(t(X^{omega_i})) / (2D)."""
    return tuple(Fraction(m.v_pow, 2 * ctx.d) for m in t.omega_values)


def is_tempered_weight(t: TorusWeight, ctx: FieldContext) -> bool:
    return all(x <= 0 for x in nu_exponents(t, ctx))


def is_strictly_negative_weight(t: TorusWeight, ctx: FieldContext) -> bool:
    return all(x < 0 for x in nu_exponents(t, ctx))
