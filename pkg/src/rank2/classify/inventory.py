"""Reconstruction of the irreducible inventory of one central character."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..calibration import build_graph, components, is_placed_skew, placed_shapes
from ..heckemod.module import MINUS, PLUS, ModuleRep, build_calibrated, build_induced, build_principal, tensor_module
from ..heckemod.relations import check_relations
from ..heckemod.structure import Factor, composition_factors, descriptor, is_irreducible
from ..heckemod.weights import is_calibrated, lemma_bound_violations, support, temperedness
from ..rootdata import enumerate_weyl, minimal_coset_reps, root_system
from ..torus import TorusWeight, orbit, pz_sets, w_action
from .fixtures import CentralCharFixture, ExpectedModule, fixture_catalog


@dataclass
class Irreducible:
    """One distinct irreducible module found for a central character."""

    module: ModuleRep
    descriptor: tuple
    multiplicity: int
    calibrated: bool
    J: tuple[str, ...] | None
    tempered: bool
    square_integrable: bool
    relations_ok: bool
    constructions: list[str] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.descriptor[0]

    @property
    def support(self) -> tuple[tuple[str, int], ...]:
        return self.descriptor[1]

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "support": [w for w, _ in self.support],
            "weight_dims": [c for _, c in self.support],
            "calibrated": self.calibrated,
            "J": list(self.J) if self.J is not None else "nc",
            "tempered": self.tempered,
            "square_integrable": self.square_integrable,
            "irreducible": True,
            "relations_ok": self.relations_ok,
            "multiplicity": self.multiplicity,
            "constructions": list(self.constructions),
        }


@dataclass
class ClassReport:
    fixture: CentralCharFixture
    P: list[str]
    Z: list[str]
    orbit_size: int
    components: list[list[str]]
    modules: list[Irreducible]
    principal_irreducible: bool
    constructed: list[dict]
    diffs: list[str]

    def as_dict(self) -> dict:
        f = self.fixture
        return {
            "label": f.label,
            "system": f.system,
            "omega_values": f.omega_values.to_pairs(),
            "P": self.P,
            "Z": self.Z,
            "orbit_size": self.orbit_size,
            "components": self.components,
            "modules": [m.as_dict() for m in self.modules],
            "composition_of_principal": [
                {"dim": m.dim, "support": [w for w, _ in m.support], "multiplicity": m.multiplicity}
                for m in self.modules
            ],
            "constructed": self.constructed,
            "metadata": f.metadata,
            "diffs": list(self.diffs),
        }


def _support_key(sup) -> tuple:
    return tuple(sorted(sup, key=lambda x: (len(x[0]), x[0])))


def _shape_support(rs, t, shape) -> tuple:
    names = {p.weight: p.rep.name() for p in orbit(rs, t)}
    c = Counter(names[w_action(rs, w, shape.t)] for w in shape.tableaux)
    return _support_key(c.items())


class _Ledger:
    """Collects constructed modules and diffs for one fixture."""

    def __init__(self, label: str):
        self.label = label
        self.diffs: list[str] = []
        self.constructed: list[dict] = []

    def diff(self, msg: str) -> None:
        self.diffs.append(msg)

    def relations(self, rs, m: ModuleRep, name: str) -> bool:
        rep = check_relations(rs, m)
        if not rep.ok:
            self.diff(f"{name}: relation failures {rep.failures}")
        return rep.ok

    def record(self, name: str, m: ModuleRep, ok: bool, irreducible: bool | None, desc: tuple | None):
        self.constructed.append(
            {
                "construction": name,
                "dim": m.dim,
                "support": [w for w, _ in desc[1]] if desc else [],
                "relations_ok": ok,
                "irreducible": irreducible,
            }
        )


def _roots(rs, roots) -> list[str]:
    return [rs.root_name(b) for b in sorted(roots, key=lambda b: (sum(b), b))]


def reconstruct_inventory(f: CentralCharFixture) -> ClassReport:
    rs, t, ctx = f.rs, f.omega_values, f.ctx
    led = _Ledger(f.label)
    P, Z = pz_sets(rs, t, ctx)
    orb = orbit(rs, t)
    g = build_graph(rs, t, ctx)
    comps = [[p.rep.name() for p in c] for c in components(g)]
    _check_components(f, rs, t, comps, led)

    # (i) calibrated modules from placed skew shapes
    shapes = placed_shapes(rs, t, ctx)
    skew = [s for s in shapes if is_placed_skew(rs, s, ctx)]
    calibrated_built: dict[tuple, str] = {}
    shape_supports = {}
    for s in shapes:
        J = tuple(_roots(rs, s.J))
        shape_supports[_shape_support(rs, t, s)] = (J, s in skew)
    for s in skew:
        J = tuple(_roots(rs, s.J))
        name = f"calibrated(J={{{','.join(J)}}})"
        try:
            m = build_calibrated(rs, s, ctx, verify=False)
            ok = led.relations(rs, m, name)
            irr = is_irreducible(rs, m).irreducible
            d = descriptor(rs, m, t)
            led.record(name, m, ok, irr, d)
            if not irr:
                led.diff(f"{name} is reducible")
            calibrated_built[(d[0], _support_key(d[1]))] = name
        except Exception as exc:  # recorded, not thrown
            led.diff(f"{name}: {type(exc).__name__}: {exc}")

    # (ii) induced modules
    induced_factors: list[tuple[str, Factor]] = []
    if f.spec.induction is not None:
        induced_factors = _induced(f, led)

    # A1xA1: outer tensor products of the factor irreducibles
    tensor_built: dict[tuple, str] = {}
    if f.system == "A1xA1":
        tensor_built = _tensors(f, led)

    # (iii) composition factors of the principal series
    modules: list[Irreducible] = []
    principal_irreducible = False
    try:
        M = build_principal(rs, t, ctx, verify=False)
        ok = led.relations(rs, M, "principal")
        facs = composition_factors(rs, M)
        principal_irreducible = len(facs) == 1
        led.record("principal", M, ok, principal_irreducible, None)
        modules = _distinct(rs, t, facs, led)
    except Exception as exc:
        led.diff(f"principal: {type(exc).__name__}: {exc}")

    for irr in modules:
        key = (irr.dim, _support_key(irr.support))
        hit = shape_supports.get(_support_key(irr.support))
        if irr.calibrated and hit is not None:
            irr.J = hit[0]
        if key in calibrated_built:
            irr.constructions.append(calibrated_built[key])
        if key in tensor_built:
            irr.constructions.append(tensor_built[key])
        for name, fac in induced_factors:
            if (fac.descriptor[0], _support_key(descriptor(rs, fac.module, t)[1])) == key:
                if name not in irr.constructions:
                    irr.constructions.append(name)
        if not irr.constructions:
            irr.constructions.append("subquotient(principal)")

    for name, fac in induced_factors:
        key = (fac.descriptor[0], _support_key(descriptor(rs, fac.module, t)[1]))
        if all((m.dim, _support_key(m.support)) != key for m in modules):
            led.diff(f"{name}: factor {key} is not a factor of the principal series")

    _reconcile(f, modules, shape_supports, calibrated_built, led)
    _global_checks(f, rs, modules, principal_irreducible, P, led)
    return ClassReport(
        f, _roots(rs, P), _roots(rs, Z), len(orb), comps, modules, principal_irreducible, led.constructed, led.diffs
    )


def _check_components(f, rs, t, comps, led) -> None:
    def weight(word: str) -> TorusWeight:
        return w_action(rs, rs.element(tuple(int(c) for c in word[1::2])), t)

    got = sorted(sorted(str(weight(w)) for w in c) for c in comps)
    want = sorted(sorted(str(weight(w)) for w in c) for c in f.spec.components)
    if got != want:
        led.diff(f"calibration graph components {comps} differ from {list(f.spec.components)}")


def _distinct(rs, t, facs: list[Factor], led: _Ledger) -> list[Irreducible]:
    counts = Counter(fa.descriptor for fa in facs)
    seen: dict[tuple, Irreducible] = {}
    for fa in facs:
        d = fa.descriptor
        if d in seen:
            continue
        m = fa.module
        ok = led.relations(rs, m, f"factor {d}")
        temp, sq = temperedness(rs, m)
        seen[d] = Irreducible(m, d, counts[d], is_calibrated(rs, m), None, temp, sq, ok)
    return sorted(seen.values(), key=_table_order)


def _table_order(m: Irreducible) -> tuple:
    first = m.support[0][0]
    return (min(len(w) for w, _ in m.support), first, m.dim)


def _induced(f: CentralCharFixture, led: _Ledger) -> list[tuple[str, Factor]]:
    rs, t, ctx = f.rs, f.omega_values, f.ctx
    i = f.spec.induction
    si = rs.element((i,))
    out = []
    for sign, base in ((PLUS, t), (MINUS, w_action(rs, si, t))):
        name = f"induced(I={{{i}}},{sign})"
        try:
            m = build_induced(rs, (i,), base, {i: sign}, ctx, verify=False)
            ok = led.relations(rs, m, name)
            # weight multiplicities are the coset counts
            want = Counter(w_action(rs, u, base) for u in minimal_coset_reps(rs, (i,)))
            if dict(want) != support(rs, m):
                led.diff(f"{name}: weight multiplicities {support(rs, m)} differ from coset count")
            checked, viol = lemma_bound_violations(rs, m, ctx)
            for v in viol:
                led.diff(f"{name}: {v}")
            facs = composition_factors(rs, m)
            led.record(name, m, ok, len(facs) == 1, descriptor(rs, m, t))
            out.extend((name, fa) for fa in facs)
        except Exception as exc:
            led.diff(f"{name}: {type(exc).__name__}: {exc}")
    return out


def _tensors(f: CentralCharFixture, led: _Ledger) -> dict[tuple, str]:
    ctx = f.ctx
    a1 = root_system("A1")
    vals = f.omega_values.omega_values
    parts = []
    for k in range(2):
        tk = TorusWeight((vals[k],))
        parts.append(_distinct_quiet(a1, tk, composition_factors(a1, build_principal(a1, tk, ctx, verify=False))))
    rs = f.rs
    out = {}
    for x in parts[0]:
        for y in parts[1]:
            name = f"tensor({x.dim}x{y.dim})"
            m = tensor_module(x, y, verify=False)
            ok = led.relations(rs, m, name)
            irr = is_irreducible(rs, m).irreducible
            d = descriptor(rs, m, f.omega_values)
            led.record(name, m, ok, irr, d)
            if not irr:
                led.diff(f"{name} is reducible")
            out[(d[0], _support_key(d[1]))] = name
    return out


def _distinct_quiet(rs, t, facs: list[Factor]) -> list[ModuleRep]:
    seen = {}
    for fa in facs:
        seen.setdefault(fa.descriptor, fa.module)
    return [seen[d] for d in sorted(seen)]


def _reconcile(f, modules, shape_supports, calibrated_built, led) -> None:
    expected = list(f.expected_modules)
    found = {(m.dim, _support_key(m.support)): m for m in modules}
    want = {(e.dim, _support_key(e.support)): e for e in expected}
    for key in want:
        if key not in found:
            led.diff(f"expected module dim {key[0]} support {list(key[1])} not found")
    for key in found:
        if key not in want:
            led.diff(f"unexpected module dim {key[0]} support {list(key[1])}")
    for key, e in want.items():
        m = found.get(key)
        if m is None:
            continue
        tag = f"module dim {e.dim} support {[w for w, _ in e.support]}"
        if m.calibrated != e.calibrated:
            led.diff(f"{tag}: calibrated {m.calibrated}, expected {e.calibrated}")
        if e.calibrated:
            if m.J is None or set(m.J) != set(e.J):
                led.diff(f"{tag}: J {m.J}, expected {list(e.J)}")
            if key not in calibrated_built:
                led.diff(f"{tag}: no calibrated construction reproduces it")
        elif _support_key(e.support) in shape_supports and shape_supports[_support_key(e.support)][1]:
            led.diff(f"{tag}: nc row matches the support of a placed skew shape")
        if m.tempered != e.tempered:
            led.diff(f"{tag}: tempered {m.tempered}, expected {e.tempered}")
        if m.square_integrable != e.square_integrable:
            led.diff(f"{tag}: square integrable {m.square_integrable}, expected {e.square_integrable}")
        if e.multiplicity is not None and m.multiplicity != e.multiplicity:
            led.diff(f"{tag}: multiplicity {m.multiplicity}, expected {e.multiplicity}")


def _global_checks(f, rs, modules, principal_irreducible, P, led) -> None:
    order = len(enumerate_weyl(rs))
    total = sum(m.dim * m.multiplicity for m in modules)
    if modules and total != order:
        led.diff(f"sum of dim x multiplicity is {total}, expected |W| = {order}")
    if modules and principal_irreducible != (not P):
        led.diff(f"principal series irreducible={principal_irreducible} but P(t) empty={not P}")
    for m in modules:
        checked, viol = lemma_bound_violations(rs, m.module, f.ctx)
        for v in viol:
            led.diff(f"factor dim {m.dim}: {v}")


def inventory_for(label: str, ctx=None) -> ClassReport:
    (f,) = fixture_catalog(ctx, labels=[label])
    return reconstruct_inventory(f)
