"""Submodule closures, irreducibility certificates and composition series.

Irreducibility is decided as follows.  Pick a joint X-eigenspace E of
smallest dimension (at most 2 is supported).  First make sure every nonzero
vector of E generates M: for dim E = 1 spin the basis vector, for dim E = 2
spin both basis vectors and then use the pencil v1 + lam*v2, whose
non-generating parameters are common roots of determinants built from the
two spanning word sets.  Then look for an algebra element a, a combination of
the X_i - t_i and their products, whose kernel is E or at worst a space of
dimension 2 all of whose vectors generate (checked with the same pencil
test).  Finally spin a nonzero vector of ker(a^T) under the transposed
generators (Norton's criterion): a full span proves irreducibility, a
proper span U gives the submodule U^perp.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..rootdata import RootSystem
from ..scalars import CycScalar
from ..torus import TorusWeight, orbit
from . import linalg as la
from .linalg import EchelonSpan, Matrix, Vector
from .module import ModuleRep
from .weights import adapt, weight_decomposition


class UnsupportedModule(RuntimeError):
    """Raised when the eigenspace-dimension bound of the irreducibility test is exceeded."""


def _spin(gens: Sequence[Matrix], seeds: Sequence[Vector], n: int, limit: int | None = None):
    """Closure of ``seeds`` under ``gens``; returns (span, words).

    ``words[k] = (s, g1, ..., gr)`` means the k-th spanning vector is
    g_r ... g_1 seed_s.  Stops early once ``limit`` vectors are found.
    """
    span = EchelonSpan(n)
    words: list[tuple[int, ...]] = []
    queue: list[tuple[Vector, tuple[int, ...]]] = []
    for s, v in enumerate(seeds):
        if span.add(v):
            words.append((s,))
            queue.append((tuple(v), (s,)))
    head = 0
    while head < len(queue) and (limit is None or len(span) < limit):
        v, w = queue[head]
        head += 1
        for gi, g in enumerate(gens):
            img = la.matvec(g, v)
            if span.add(img):
                words.append(w + (gi,))
                queue.append((img, w + (gi,)))
                if len(span) == n:
                    return span, words
    return span, words


def submodule_closure(m: ModuleRep, seed: Sequence[Vector]) -> list[Vector]:
    """Basis (reduced echelon) of the smallest submodule containing ``seed``."""
    span, _ = _spin(m.generators(), seed, m.dim)
    return span.basis()


def _apply_word(gens: Sequence[Matrix], word: tuple[int, ...], v: Vector) -> Vector:
    for gi in word[1:]:
        v = la.matvec(gens[gi], v)
    return v


# ---------------------------------------------------------------------------
# sub and quotient representations


def _echelon(vectors: Sequence[Vector], n: int) -> EchelonSpan:
    sp = EchelonSpan(n)
    for v in vectors:
        sp.add(v)
    return sp


def _block_echelon(m: ModuleRep, vectors: Sequence[Vector]) -> EchelonSpan:
    """Echelon basis of an X-stable subspace built from its block projections.

    An X-stable subspace is the direct sum of its projections onto the
    generalized weight blocks, so the rows stay inside single blocks.
    """
    if m.blocks is None:
        return _echelon(vectors, m.dim)
    sp = EchelonSpan(m.dim)
    for _, a, b in m.blocks:
        for v in vectors:
            sp.add(tuple(x if a <= k < b else la.ZERO for k, x in enumerate(v)))
    if len(sp) != len(_echelon(vectors, m.dim)):
        raise AssertionError("subspace is not X-stable")
    return sp


def _counted_blocks(m: ModuleRep, coords: Sequence[int]):
    if m.blocks is None:
        return None
    out, start = [], 0
    for t, a, b in m.blocks:
        k = sum(1 for c in coords if a <= c < b)
        if k:
            out.append((t, start, start + k))
            start += k
    return tuple(out)


def sub_rep(m: ModuleRep, span: EchelonSpan) -> ModuleRep:
    order = sorted(range(len(span.rows)), key=lambda k: span.pivots[k])
    rows = [span.rows[k] for k in order]
    piv = [span.pivots[k] for k in order]

    def restrict(a: Matrix) -> Matrix:
        cols = []
        for b in rows:
            y = la.matvec(a, b)
            cols.append(tuple(y[p] for p in piv))
        return la.from_columns(cols)

    return ModuleRep(
        m.system,
        tuple(restrict(a) for a in m.T),
        tuple(restrict(a) for a in m.X),
        tuple(restrict(a) for a in m.Xinv),
        tuple(f"sub[{k}]" for k in range(len(rows))),
        f"sub({m.origin})",
        m.ctx,
        m.central,
        _counted_blocks(m, piv),
    )


def quotient_rep(m: ModuleRep, span: EchelonSpan) -> ModuleRep:
    piv = set(span.pivots)
    comp = [c for c in range(m.dim) if c not in piv]

    def induced(a: Matrix) -> Matrix:
        cols = []
        for c in comp:
            y = span.reduce(tuple(row[c] for row in a))
            cols.append(tuple(y[j] for j in comp))
        return la.from_columns(cols)

    return ModuleRep(
        m.system,
        tuple(induced(a) for a in m.T),
        tuple(induced(a) for a in m.X),
        tuple(induced(a) for a in m.Xinv),
        tuple(m.labels[c] for c in comp),
        f"quot({m.origin})",
        m.ctx,
        m.central,
        _counted_blocks(m, comp),
    )


# ---------------------------------------------------------------------------
# univariate polynomials over CycScalar (coefficients low degree first)


def _trim(p: list[CycScalar]) -> list[CycScalar]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def poly_divmod(a: list[CycScalar], b: list[CycScalar]):
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = b[-1].inverse()
    quo = [la.ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        k = len(a) - len(b)
        quo[k] = c
        for j, bj in enumerate(b):
            a[k + j] = a[k + j] - c * bj
        a = _trim(a)
    return quo, a


def poly_gcd(a: list[CycScalar], b: list[CycScalar]) -> list[CycScalar]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def det(a: Sequence[Sequence[CycScalar]]) -> CycScalar:
    m = [list(r) for r in a]
    n = len(m)
    out = la.ONE
    for c in range(n):
        p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if p is None:
            return la.ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        piv = m[c][c]
        out = out * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def interpolate(xs: Sequence[int], ys: Sequence[CycScalar]) -> list[CycScalar]:
    """Coefficients of the polynomial through (xs[k], ys[k]) (Newton form)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * CycScalar.from_fraction(Fraction(1, xs[i] - xs[i - j]))
    out = [la.ZERO] * n
    for k in range(n - 1, -1, -1):
        # out = out * (x - xs[k]) + coef[k]
        shifted = [la.ZERO] + out[:-1]
        out = [s - CycScalar.from_fraction(xs[k]) * o for s, o in zip(shifted, out)]
        out[0] = out[0] + coef[k]
    return _trim(out)


def _pencil_det(gens, words, v1: Vector, v2: Vector) -> list[CycScalar]:
    a = [_apply_word(gens, w, v1) for w in words]
    b = [_apply_word(gens, w, v2) for w in words]
    n = len(words)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        lam = CycScalar.from_fraction(x)
        ys.append(det([[ai + lam * bi for ai, bi in zip(ra, rb)] for ra, rb in zip(a, b)]))
    return interpolate(xs, ys)


# ---------------------------------------------------------------------------
# irreducibility


@dataclass(frozen=True, eq=False)
class Verdict:
    irreducible: bool
    submodule: tuple[Vector, ...] | None  # nonzero proper submodule when reducible
    method: str


def _joint_eigenspaces(rs: RootSystem, m: ModuleRep) -> list[tuple[TorusWeight, tuple[Vector, ...]]]:
    return [(ws.weight, ws.eigen_basis) for ws in weight_decomposition(rs, m)]


def _generates(m: ModuleRep, v: Vector) -> EchelonSpan | None:
    """None if v generates M, else the (proper) closure."""
    span, _ = _spin(m.generators(), [v], m.dim)
    return None if len(span) == m.dim else span


def _every_vector_generates(m: ModuleRep, basis: Sequence[Vector]) -> tuple[bool, EchelonSpan | None, str]:
    gens = m.generators()
    if len(basis) == 1:
        bad = _generates(m, basis[0])
        return bad is None, bad, "spin"
    v1, v2 = basis
    words = []
    for v in (v1, v2):
        span, w = _spin(gens, [v], m.dim)
        if len(span) < m.dim:
            return False, span, "spin"
        words.append(w)
    g = poly_gcd(_pencil_det(gens, words[0], v1, v2), _pencil_det(gens, words[1], v1, v2))
    extra = 1
    while len(g) > 2 and extra <= 4:
        v = la.vadd(v1, la.vscale(CycScalar.from_fraction(extra + 1), v2))
        span, w = _spin(gens, [v], m.dim)
        if len(span) < m.dim:
            return False, span, "pencil"
        g = poly_gcd(g, _pencil_det(gens, w, v1, v2))
        extra += 1
    if len(g) <= 1:
        return True, None, "pencil"
    if len(g) == 2:
        lam0 = -g[0] / g[1]
        bad = _generates(m, la.vadd(v1, la.vscale(lam0, v2)))
        return bad is None, bad, "pencil"
    raise UnsupportedModule("pencil gcd has a nonlinear factor")


def _kernel_element(rs: RootSystem, m: ModuleRep, t: TorusWeight, target: int) -> Matrix:
    """An algebra element a with ker(a) of dimension ``target`` if one is found
    among a few polynomial combinations of the X_i - t_i, else the best (<= 2) found."""
    n = m.dim
    N = [la.sub(m.X[i], la.scalar_matrix(n, t.omega_values[i].embed())) for i in range(rs.rank)]
    cands = []
    for r in (1, 2, 3, 5, 7):
        lin = N[0]
        for k in range(1, rs.rank):
            lin = la.add(lin, la.scale(CycScalar.from_fraction(r ** k), N[k]))
        cands.append(lin)
    quad = [la.matmul(x, y) for x in N for y in N]
    for lin in list(cands[:2]):
        for qm in quad:
            cands.append(la.add(lin, qm))
    best, best_null = None, None
    for a in cands:
        k = len(la.nullspace(a))
        if k == target:
            return a
        if best_null is None or k < best_null:
            best, best_null = a, k
    if best_null > 2:
        raise UnsupportedModule("could not isolate a kernel of dimension <= 2")
    return best


def is_irreducible(rs: RootSystem, m: ModuleRep) -> Verdict:
    memo = m._cache.get("irreducible")
    if memo is not None:
        return memo
    spaces = _joint_eigenspaces(rs, m)
    if any(len(b) >= 3 for _, b in spaces):
        raise UnsupportedModule("joint eigenspace of dimension >= 3")
    verdict = _decide(rs, m, spaces)
    m._cache["irreducible"] = verdict
    return verdict


def _decide(rs: RootSystem, m: ModuleRep, spaces) -> Verdict:
    t, E = min(spaces, key=lambda s: len(s[1]))
    ok, bad, how = _every_vector_generates(m, list(E))
    if not ok:
        return Verdict(False, tuple(bad.basis()), how)
    a = _kernel_element(rs, m, t, len(E))
    K = la.nullspace(a)
    if len(K) != len(E):
        ok, bad, how2 = _every_vector_generates(m, K)
        if not ok:
            return Verdict(False, tuple(bad.basis()), how2)
        how = how + "/" + how2
    w = la.nullspace(la.transpose(a))[0]
    dual = [la.transpose(g) for g in m.generators()]
    U, _ = _spin(dual, [w], m.dim)
    if len(U) == m.dim:
        return Verdict(True, None, how + "+dual")
    S = la.nullspace([list(u) for u in U.basis()])
    return Verdict(False, tuple(_echelon(S, m.dim).basis()), "dual")


# ---------------------------------------------------------------------------
# composition series


@dataclass(frozen=True, eq=False)
class Factor:
    module: ModuleRep
    descriptor: tuple  # (dim, ((word, multiplicity), ...))


def descriptor(rs: RootSystem, m: ModuleRep, ref: TorusWeight) -> tuple:
    """(dim, sorted (orbit word, gen. multiplicity)) relative to the orbit of ``ref``."""
    names = {p.weight: p.rep.name() for p in orbit(rs, ref)}
    sup = []
    for ws in weight_decomposition(rs, m):
        sup.append((names[ws.weight], ws.dim_gen))
    return (m.dim, tuple(sorted(sup, key=lambda x: (len(x[0]), x[0]))))


def composition_factors(rs: RootSystem, m: ModuleRep) -> list[Factor]:
    """Irreducible subquotients of a composition series, with multiplicity."""
    if m.central is None:
        raise ValueError("composition_factors needs a module with a central character")
    out: list[Factor] = []
    stack = [adapt(rs, m)]
    while stack:
        cur = stack.pop()
        v = is_irreducible(rs, cur)
        if v.irreducible:
            out.append(Factor(cur, descriptor(rs, cur, m.central)))
            continue
        span = _block_echelon(cur, v.submodule)
        stack.append(quotient_rep(cur, span))
        stack.append(sub_rep(cur, span))
    return out


def factor_multiset(factors: Sequence[Factor]) -> Counter:
    return Counter(f.descriptor for f in factors)
