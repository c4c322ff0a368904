"""Finite-dimensional affine Hecke modules and their constructors."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..calibration import PlacedShape
from ..rootdata import (
    RootSystem,
    Vec,
    WeylElement,
    inverse as w_inverse,
    minimal_coset_reps,
    multiply,
    root_system,
)
from ..scalars import CycScalar, FieldContext
from ..torus import TorusWeight, eval_root, eval_weight, w_action
from . import linalg as la
from .linalg import Matrix

PLUS, MINUS = "plus", "minus"


class CharacterError(ValueError):
    """The requested one-dimensional character of a parabolic subalgebra is inconsistent."""


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """Matrices of T_i and X^{omega_i} (and X^{-omega_i}) on a labelled basis."""

    system: str
    T: tuple[Matrix, ...]
    X: tuple[Matrix, ...]
    Xinv: tuple[Matrix, ...]
    labels: tuple[str, ...]
    origin: str
    ctx: FieldContext
    central: TorusWeight | None = None
    # (weight, start, stop): X is block diagonal with these generalized weight blocks
    blocks: tuple[tuple[TorusWeight, int, int], ...] | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def rs(self) -> RootSystem:
        return root_system(self.system)

    def x_power(self, lam: Sequence[int]) -> Matrix:
        """Matrix of X^lam, lam in omega coordinates."""
        lam = tuple(lam)
        memo = self._cache.setdefault("xpow", {})
        if lam not in memo:
            out = la.identity(self.dim)
            for i, c in enumerate(lam):
                base = self.X[i] if c > 0 else self.Xinv[i]
                if c:
                    out = la.matmul(out, la.power(base, abs(c)))
            memo[lam] = out
        return memo[lam]

    def generators(self) -> list[Matrix]:
        return list(self.T) + list(self.X)


def _check_dims(m: ModuleRep) -> None:
    n = m.dim
    for a in m.generators() + list(m.Xinv):
        if len(a) != n or any(len(r) != n for r in a):
            raise ValueError("matrix shape does not match module dimension")


def build_calibrated(rs: RootSystem, shape: PlacedShape, ctx: FieldContext, verify: bool = True) -> ModuleRep:
    """The seminormal module on the standard tableaux of a placed skew shape."""
    words = shape.tableaux
    n = len(words)
    pos = {w.action: k for k, w in enumerate(words)}
    weights = [w_action(rs, w, shape.t) for w in words]
    qdiff, qinv = ctx.qdiff, ctx.qinv
    T = []
    for i in rs.indices:
        cols = []
        si = rs.element((i,))
        for k, w in enumerate(words):
            val = eval_root(rs, weights[k], tuple(-x for x in rs.simple_root(i))).embed()
            den = la.ONE - val
            if den.is_zero():
                raise ValueError(f"shape is not calibratable: weight {w.name()} fixed by s{i}")
            d = qdiff / den
            col = [la.ZERO] * n
            col[k] = d
            other = multiply(rs, si, w)
            if other.action in pos:
                col[pos[other.action]] = col[pos[other.action]] + qinv + d
            cols.append(col)
        T.append(la.from_columns(cols))
    X, Xinv = [], []
    for i in range(rs.rank):
        diag = [wt.omega_values[i].embed() for wt in weights]
        X.append(tuple(tuple(diag[r] if r == c else la.ZERO for c in range(n)) for r in range(n)))
        Xinv.append(tuple(tuple(diag[r].inverse() if r == c else la.ZERO for c in range(n)) for r in range(n)))
    J = ",".join(rs.root_name(b) for b in sorted(shape.J))
    m = ModuleRep(
        rs.label,
        tuple(T),
        tuple(X),
        tuple(Xinv),
        tuple(w.name() for w in words),
        f"calibrated(J={{{J}}})",
        ctx,
        shape.t,
    )
    _check_dims(m)
    if verify:
        _verify(rs, m)
    return m


def _verify(rs: RootSystem, m: ModuleRep) -> None:
    from .relations import check_relations

    rep = check_relations(rs, m)
    if not rep.ok:
        raise AssertionError(f"{m.origin}: relation failures {rep.failures}")


def sign_scalar(sign: str, ctx: FieldContext) -> CycScalar:
    if sign == PLUS:
        return ctx.q
    if sign == MINUS:
        return -ctx.qinv
    raise ValueError(f"sign must be {PLUS!r} or {MINUS!r}")


def build_induced(
    rs: RootSystem,
    I: Sequence[int],
    t: TorusWeight,
    signs: Mapping[int, str],
    ctx: FieldContext,
    verify: bool = True,
) -> ModuleRep:
    """Ind from the parabolic subalgebra H_I of the character T_i -> c_i, X^lam -> t(X^lam)."""
    I = tuple(sorted(set(I)))
    chars: dict[int, CycScalar] = {}
    for i in I:
        s = signs.get(i, PLUS)
        need = ctx.q_mono(2 if s == PLUS else -2)
        if eval_root(rs, t, rs.simple_root(i)) != need:
            raise CharacterError(
                f"T_{i} -> {'q' if s == PLUS else '-q^-1'} requires t(X^a{i}) = q^{2 if s == PLUS else -2}"
            )
        chars[i] = sign_scalar(s, ctx)
    reps = minimal_coset_reps(rs, I)
    n = len(reps)
    pos = {w.action: k for k, w in enumerate(reps)}
    qdiff = ctx.qdiff

    # T_i in the basis T_w (x) v
    T = []
    for i in rs.indices:
        si = rs.element((i,))
        cols = []
        for k, u in enumerate(reps):
            col = [la.ZERO] * n
            su = multiply(rs, si, u)
            if su.length > u.length:
                if su.action in pos:
                    col[pos[su.action]] = la.ONE
                else:
                    # s_i u = u s_j with j in I
                    conj = multiply(rs, w_inverse(rs, u), su)
                    j = conj.word[0]
                    col[k] = chars[j]
            else:
                col[k] = qdiff
                col[pos[su.action]] = col[pos[su.action]] + la.ONE
            cols.append(col)
        T.append(la.from_columns(cols))

    memo: dict[tuple[Vec, tuple], tuple[CycScalar, ...]] = {}
    alpha_om = rs.simple_in_omega

    def apply_T(i: int, vec: Sequence[CycScalar]) -> tuple[CycScalar, ...]:
        return la.matvec(T[i - 1], vec)

    def F(lam: Vec, u: WeylElement) -> tuple[CycScalar, ...]:
        """X^lam (T_u (x) v) as a coordinate vector."""
        key = (lam, u.action)
        if key in memo:
            return memo[key]
        if u.length == 0:
            vec = [la.ZERO] * n
            vec[pos[u.action]] = eval_weight(t, lam).embed()
            out = tuple(vec)
        else:
            i = u.word[0]
            rest = multiply(rs, rs.element((i,)), u)
            si_lam = rs.element((i,)).act(lam)
            out = apply_T(i, F(si_lam, rest))
            nl = lam[i - 1]
            a = alpha_om[i - 1]
            # X^lam T_i = T_i X^{s_i lam} + (q - q^-1) * corr(lam)
            if nl > 0:
                terms = [(tuple(l - k * x for l, x in zip(lam, a)), 1) for k in range(nl)]
            elif nl < 0:
                terms = [(tuple(l + k * x for l, x in zip(lam, a)), -1) for k in range(1, -nl + 1)]
            else:
                terms = []
            for mu, sgn in terms:
                vec = F(mu, rest)
                c = qdiff if sgn > 0 else -qdiff
                out = la.vadd(out, la.vscale(c, vec))
        memo[key] = out
        return out

    X, Xinv = [], []
    for i in range(rs.rank):
        om = tuple(int(j == i) for j in range(rs.rank))
        neg = tuple(-x for x in om)
        X.append(la.from_columns([F(om, u) for u in reps]))
        Xinv.append(la.from_columns([F(neg, u) for u in reps]))
    if I:
        desc = ",".join(f"{i}:{'+q' if chars[i] == ctx.q else '-q^-1'}" for i in I)
        origin = f"induced(I={{{desc}}})"
    else:
        origin = "principal"
    m = ModuleRep(rs.label, tuple(T), tuple(X), tuple(Xinv), tuple(u.name() for u in reps), origin, ctx, t)
    _check_dims(m)
    if verify:
        _verify(rs, m)
    return m


def build_principal(rs: RootSystem, t: TorusWeight, ctx: FieldContext, verify: bool = True) -> ModuleRep:
    return build_induced(rs, (), t, {}, ctx, verify=verify)


def _kron(a: Matrix, b: Matrix) -> Matrix:
    ra, rb = len(a), len(b)
    return tuple(
        tuple(a[i // rb][j // rb] * b[i % rb][j % rb] for j in range(ra * rb)) for i in range(ra * rb)
    )


def tensor_module(m1: ModuleRep, m2: ModuleRep, verify: bool = True) -> ModuleRep:
    """Outer tensor product of two A1 modules, a module for A1xA1."""
    if m1.system != "A1" or m2.system != "A1":
        raise ValueError("tensor_module expects two A1 modules")
    i1, i2 = la.identity(m1.dim), la.identity(m2.dim)
    central = None
    if m1.central is not None and m2.central is not None:
        central = TorusWeight(m1.central.omega_values + m2.central.omega_values)
    m = ModuleRep(
        "A1xA1",
        (_kron(m1.T[0], i2), _kron(i1, m2.T[0])),
        (_kron(m1.X[0], i2), _kron(i1, m2.X[0])),
        (_kron(m1.Xinv[0], i2), _kron(i1, m2.Xinv[0])),
        tuple(f"{a}|{b}" for a in m1.labels for b in m2.labels),
        f"tensor({m1.origin},{m2.origin})",
        m1.ctx,
        central,
    )
    if verify:
        _verify(root_system("A1xA1"), m)
    return m
