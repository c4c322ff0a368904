"""Generalized weight spaces, tau intertwiners and temperedness."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..rootdata import RootSystem
from ..scalars import FieldContext
from ..torus import TorusWeight, eval_root, is_strictly_negative_weight, is_tempered_weight, orbit, w_action
from . import linalg as la
from .linalg import Matrix, Vector
from .module import ModuleRep


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class WeightSpace:
    weight: TorusWeight
    gen_basis: tuple[Vector, ...]
    eigen_basis: tuple[Vector, ...]

    @property
    def dim_gen(self) -> int:
        return len(self.gen_basis)

    @property
    def dim_eigen(self) -> int:
        return len(self.eigen_basis)


def _shifted(m: ModuleRep, t: TorusWeight) -> list[Matrix]:
    return [
        la.sub(m.X[i], la.scalar_matrix(m.dim, t.omega_values[i].embed())) for i in range(len(m.X))
    ]


def _stack(mats: Sequence[Matrix]) -> list[tuple]:
    rows: list[tuple] = []
    for a in mats:
        rows.extend(a)
    return rows


def generalized_kernel(m: ModuleRep, t: TorusWeight) -> list[Vector]:
    powers = []
    for a in _shifted(m, t):
        p, null = a, len(la.nullspace(a))
        if null == 0:
            return []
        while True:
            nxt = la.matmul(p, a)
            nn = len(la.nullspace(nxt))
            if nn == null:
                break
            p, null = nxt, nn
        powers.append(p)
    return la.nullspace(_stack(powers))


def eigenspace(m: ModuleRep, t: TorusWeight) -> list[Vector]:
    return la.nullspace(_stack(_shifted(m, t)))


def weight_decomposition(
    rs: RootSystem, m: ModuleRep, orbit_weights: Sequence[TorusWeight] | None = None
) -> list[WeightSpace]:
    """Nonzero generalized weight spaces, in the order of ``orbit_weights``."""
    memo = m._cache.get("weights")
    if memo is not None and orbit_weights is None:
        return memo
    if m.blocks is not None and orbit_weights is None:
        out = [_block_space(m, t, a, b) for t, a, b in m.blocks]
        m._cache["weights"] = out
        return out
    if orbit_weights is None:
        if m.central is None:
            raise DecompositionError("module has no central character; pass orbit_weights")
        orbit_weights = [p.weight for p in orbit(rs, m.central)]
    out = []
    total = 0
    for t in orbit_weights:
        if total == m.dim:
            break
        gen = generalized_kernel(m, t)
        if gen:
            eig = eigenspace(m, t)
            out.append(WeightSpace(t, tuple(gen), tuple(eig)))
            total += len(gen)
    if total != m.dim:
        raise DecompositionError(f"weights account for {total} of {m.dim} dimensions")
    m._cache["weights"] = out
    return out


def _block_space(m: ModuleRep, t: TorusWeight, a: int, b: int) -> WeightSpace:
    n = m.dim
    unit = [tuple(la.ONE if r == c else la.ZERO for r in range(n)) for c in range(a, b)]
    shifted = []
    for i in range(len(m.X)):
        c = t.omega_values[i].embed()
        shifted.extend(
            tuple(m.X[i][r][k] - (c if r == k else la.ZERO) for k in range(a, b)) for r in range(a, b)
        )
    eig = []
    for v in la.nullspace(shifted):
        full = [la.ZERO] * n
        full[a:b] = v
        eig.append(tuple(full))
    return WeightSpace(t, tuple(unit), tuple(eig))


def adapt(rs: RootSystem, m: ModuleRep) -> ModuleRep:
    """An isomorphic module in a basis of generalized weight vectors (X block diagonal)."""
    if m.blocks is not None:
        return m
    decomp = weight_decomposition(rs, m)
    cols, blocks, start = [], [], 0
    for ws in decomp:
        cols.extend(ws.gen_basis)
        blocks.append((ws.weight, start, start + ws.dim_gen))
        start += ws.dim_gen
    B = la.from_columns(cols)
    Binv = la.inverse(B)

    def conj(a: Matrix) -> Matrix:
        return la.matmul(Binv, la.matmul(a, B))

    labels = tuple(f"v{k}" for k in range(m.dim))
    return ModuleRep(
        m.system,
        tuple(conj(a) for a in m.T),
        tuple(conj(a) for a in m.X),
        tuple(conj(a) for a in m.Xinv),
        labels,
        m.origin,
        m.ctx,
        m.central,
        tuple(blocks),
    )


def support(rs: RootSystem, m: ModuleRep) -> dict[TorusWeight, int]:
    return {ws.weight: ws.dim_gen for ws in weight_decomposition(rs, m)}


def is_calibrated(rs: RootSystem, m: ModuleRep) -> bool:
    return all(ws.dim_gen == ws.dim_eigen for ws in weight_decomposition(rs, m))


def temperedness(rs: RootSystem, m: ModuleRep) -> tuple[bool, bool]:
    ws = weight_decomposition(rs, m)
    ctx = m.ctx
    return (
        all(is_tempered_weight(w.weight, ctx) for w in ws),
        all(is_strictly_negative_weight(w.weight, ctx) for w in ws),
    )


# ---------------------------------------------------------------------------
# restriction to weight spaces and tau operators


def restrict(a: Matrix, basis: Sequence[Vector], target: Sequence[Vector] | None = None) -> Matrix:
    """Matrix of ``a`` from span(basis) into span(target) (defaults to basis)."""
    target = basis if target is None else target
    images = [la.matvec(a, b) for b in basis]
    return la.solve_in_basis(list(target), images)


def _space(decomp: Sequence[WeightSpace], t: TorusWeight) -> WeightSpace | None:
    return next((ws for ws in decomp if ws.weight == t), None)


class TauUndefined(ValueError):
    pass


def tau(rs: RootSystem, m: ModuleRep, t: TorusWeight, i: int) -> Matrix:
    """tau_i : M_t^gen -> M_{s_i t}^gen in the fixed bases of the two spaces."""
    if eval_root(rs, t, rs.simple_root(i)).is_one():
        raise TauUndefined(f"tau_{i} undefined: t(X^a{i}) = 1")
    decomp = weight_decomposition(rs, m)
    src = _space(decomp, t)
    dst_w = w_action(rs, rs.element((i,)), t)
    dst = _space(decomp, dst_w)
    if src is None:
        return ()
    basis = list(src.gen_basis)
    g = len(basis)
    neg = tuple(-x for x in rs.simple_in_omega[i - 1])
    R = restrict(m.x_power(neg), basis)
    inv = la.inverse(la.sub(la.identity(g), R))
    qd = m.ctx.qdiff
    # (T_i - (q - q^-1) (1 - X^-a)^-1) applied to the basis, as columns
    tb = [la.matvec(m.T[i - 1], b) for b in basis]
    corr = la.matmul(la.from_columns(basis), la.scale(qd, inv))
    cols = [la.vadd(c, tuple(-x for x in corr_col)) for c, corr_col in zip(tb, la.columns(corr))]
    if dst is None:
        if any(not la.is_zero_vector(c) for c in cols):
            raise AssertionError("tau image leaves the module support")
        return la.zeros(0, g)
    return la.solve_in_basis(list(dst.gen_basis), cols)


def restricted_x(rs: RootSystem, m: ModuleRep, t: TorusWeight, lam: Sequence[int]) -> Matrix:
    ws = _space(weight_decomposition(rs, m), t)
    return restrict(m.x_power(tuple(lam)), list(ws.gen_basis)) if ws else ()


def tau_checks(rs: RootSystem, m: ModuleRep, lambdas: Sequence[Sequence[int]]) -> list[str]:
    """Exact checks of the intertwining (b), square (c) and braid (d) identities.

    Returns the list of failures; empty means everything held where defined.
    """
    failures = []
    decomp = weight_decomposition(rs, m)
    q, qinv = m.ctx.q, m.ctx.qinv
    for ws in decomp:
        t = ws.weight
        g = ws.dim_gen
        I = la.identity(g)
        for i in rs.indices:
            if eval_root(rs, t, rs.simple_root(i)).is_one():
                continue
            ti = tau(rs, m, t, i)
            st = w_action(rs, rs.element((i,)), t)
            if len(ti):
                for lam in lambdas:
                    slam = rs.element((i,)).act(lam)
                    lhs = la.matmul(restricted_x(rs, m, st, lam), ti)
                    rhs = la.matmul(ti, restricted_x(rs, m, t, slam))
                    if not la.mat_eq(lhs, rhs):
                        failures.append(f"(b) {t} i={i} lam={tuple(lam)}")
                sq = la.matmul(tau(rs, m, st, i), ti)
            else:
                sq = la.zeros(g, g)
            # (c) with the commuting denominator (1 - Y)(1 - Y^-1) cleared, Y = X^{alpha_i}
            Y = restricted_x(rs, m, t, rs.simple_in_omega[i - 1])
            Yi = la.inverse(Y)
            num = la.matmul(la.sub(la.scale(q, I), la.scale(qinv, Y)), la.sub(la.scale(q, I), la.scale(qinv, Yi)))
            den = la.matmul(la.sub(I, Y), la.sub(I, Yi))
            if not la.mat_eq(la.matmul(sq, den), num):
                failures.append(f"(c) {t} i={i}")
        for i in rs.indices:
            for j in rs.indices:
                if i >= j:
                    continue
                mij = rs.braid_order(i, j)
                a = _tau_word(rs, m, t, ([i, j] * mij)[:mij])
                b = _tau_word(rs, m, t, ([j, i] * mij)[:mij])
                if a is None or b is None:
                    continue
                if not _same_map(a, b):
                    failures.append(f"(d) {t} pair=({i},{j})")
    return failures


def _same_map(a, b) -> bool:
    if a == "zero" or b == "zero":
        other = b if a == "zero" else a
        return other == "zero" or all(x.is_zero() for row in other for x in row)
    return la.mat_eq(a, b)


def _tau_word(rs: RootSystem, m: ModuleRep, t: TorusWeight, letters: list[int]):
    """tau_{l1} ... tau_{lk} on M_t^gen (rightmost first); "zero" if it factors
    through a zero weight space, None if some factor is undefined."""
    cur, acc, zero = t, None, False
    for i in reversed(letters):
        if eval_root(rs, cur, rs.simple_root(i)).is_one():
            return None
        if not zero:
            step = tau(rs, m, cur, i)
            if len(step) == 0:
                zero = True
            else:
                acc = step if acc is None else la.matmul(step, acc)
        cur = w_action(rs, rs.element((i,)), cur)
    return "zero" if zero else acc


def lemma_bound_violations(rs: RootSystem, m: ModuleRep, ctx: FieldContext) -> tuple[int, list[str]]:
    """Check dim(M_{wt}^gen) >= 2 for wt in the calibration component of a weight t
    with t(X^{alpha_i}) = 1 and M_t^gen != 0.  Returns (#instances checked, failures)."""
    from ..calibration import build_graph, components

    decomp = weight_decomposition(rs, m)
    dims = {ws.weight: ws.dim_gen for ws in decomp}
    checked, failures = 0, []
    for ws in decomp:
        t = ws.weight
        if not any(eval_root(rs, t, rs.simple_root(i)).is_one() for i in rs.indices):
            continue
        g = build_graph(rs, t, ctx)
        comp = next(c for c in components(g) if any(p.weight == t for p in c))
        for p in comp:
            checked += 1
            if dims.get(p.weight, 0) < 2:
                failures.append(f"weight {p.weight} in component of {t} has dim {dims.get(p.weight, 0)}")
    return checked, failures
