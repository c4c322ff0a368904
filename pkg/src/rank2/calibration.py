"""Calibration graphs, placed shapes and standard tableaux."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rootdata import RootSystem, Vec, WeylElement, enumerate_weyl, inversion_set, subsets
from .scalars import FieldContext
from .torus import OrbitPoint, TorusWeight, eval_root, orbit, pz_sets, w_action


@dataclass(frozen=True)
class CalibrationGraph:
    vertices: tuple[OrbitPoint, ...]
    edges: tuple[tuple[int, int, int], ...]  # (a, b, i) with a < b vertex positions

    def neighbours(self, k: int) -> list[int]:
        return [b if a == k else a for a, b, _ in self.edges if k in (a, b)]


def build_graph(rs: RootSystem, t: TorusWeight, ctx: FieldContext) -> CalibrationGraph:
    pts = orbit(rs, t)
    pos = {p.weight: k for k, p in enumerate(pts)}
    q2, qm2 = ctx.q_mono(2), ctx.q_mono(-2)
    edges = set()
    for k, p in enumerate(pts):
        for i in rs.indices:
            val = eval_root(rs, p.weight, rs.simple_root(i))
            if val == q2 or val == qm2:
                continue
            other = pos[w_action(rs, rs.element((i,)), p.weight)]
            if other != k:
                edges.add((min(k, other), max(k, other), i))
    return CalibrationGraph(pts, tuple(sorted(edges)))


def components(g: CalibrationGraph) -> list[list[OrbitPoint]]:
    """Connected components, each listed in vertex order, ordered by first vertex."""
    parent = list(range(len(g.vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[OrbitPoint]] = {}
    for k, p in enumerate(g.vertices):
        groups.setdefault(find(k), []).append(p)
    return [groups[r] for r in sorted(groups)]


@dataclass(frozen=True)
class PlacedShape:
    t: TorusWeight
    J: frozenset[Vec]
    tableaux: tuple[WeylElement, ...]


def tableaux(rs: RootSystem, t: TorusWeight, J: Iterable[Vec], ctx: FieldContext) -> PlacedShape | None:
    """F^(t,J); ``None`` when empty."""
    J = frozenset(J)
    P, Z = pz_sets(rs, t, ctx)
    if not J <= P:
        raise ValueError("J must be a subset of P(t)")
    found = []
    for w in enumerate_weyl(rs):
        R = inversion_set(rs, w)
        if not (R & Z) and (R & P) == J:
            found.append(w)
    return PlacedShape(t, J, tuple(found)) if found else None


def placed_shapes(rs: RootSystem, t: TorusWeight, ctx: FieldContext) -> list[PlacedShape]:
    """All placed shapes (t, J), ordered by the first tableau."""
    P, _ = pz_sets(rs, t, ctx)
    out = []
    for J in subsets(sorted(P)):
        s = tableaux(rs, t, J, ctx)
        if s is not None:
            out.append(s)
    return sorted(out, key=lambda s: (s.tableaux[0].length, s.tableaux[0].word))


def _pairs(rs: RootSystem) -> list[tuple[int, int]]:
    if rs.rank == 1:
        return [(1, 1)]
    return [(i, j) for i in rs.indices for j in rs.indices if i < j]


def is_calibratable(rs: RootSystem, t: TorusWeight, pair: tuple[int, int], ctx: FieldContext) -> bool:
    i, j = pair
    # roots of the subsystem generated by alpha_i, alpha_j
    span = [b for b in rs.positive_roots if all(b[k] == 0 for k in range(rs.rank) if k + 1 not in (i, j))]
    if all(not eval_root(rs, t, b).is_one() for b in span):
        return True
    if i == j:
        return False
    ls = rs.long_short(i, j)
    if ls is None:
        return False
    lng, sht = ls
    if eval_root(rs, t, rs.simple_root(lng)).is_one() or eval_root(rs, t, rs.simple_root(sht)).is_one():
        return False
    q2 = ctx.q_mono(2)
    for u in enumerate_weyl(rs):
        if not set(u.word) <= {i, j}:
            continue
        ut = w_action(rs, u, t)
        if eval_root(rs, ut, rs.simple_root(lng)) == q2 and eval_root(rs, ut, rs.simple_root(sht)).is_one():
            return True
    return False


def is_placed_skew(rs: RootSystem, shape: PlacedShape, ctx: FieldContext) -> bool:
    return all(
        is_calibratable(rs, w_action(rs, w, shape.t), pr, ctx) for w in shape.tableaux for pr in _pairs(rs)
    )


def weight_label(t: TorusWeight) -> str:
    return ", ".join(f"({m.zeta_pow},{m.v_pow})" for m in t.omega_values)


def to_dot(g: CalibrationGraph, name: str = "G") -> str:
    """Deterministic DOT text: vertices in orbit order, edges sorted."""
    safe = "".join(c if c.isalnum() else "_" for c in name)
    lines = [f"graph {safe} {{"]
    for k, p in enumerate(g.vertices):
        lines.append(f'  v{k} [label="{p.rep.name()} [{weight_label(p.weight)}]"];')
    for a, b, i in g.edges:
        lines.append(f'  v{a} -- v{b} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
