from __future__ import annotations

import csv
import io
import json
from dataclasses import replace

import pytest

from rank2.calibration import build_graph, components
from rank2.classify.fixtures import (
    ConfigError,
    FixtureValidationError,
    _weight,
    all_specs,
    fixture_catalog,
    realize,
    resolve_label,
    validate,
)
from rank2.classify.inventory import reconstruct_inventory
from rank2.classify.report import export_graphs, full_report
from rank2.rootdata import enumerate_weyl, root_system
from rank2.scalars import FieldContext, Monomial
from rank2.torus import TorusWeight, eval_root, orbit, pz_sets

ctx = FieldContext()
q = ctx.q_mono


def names(rs, roots):
    return {rs.root_name(b) for b in roots}


def alpha_values(f):
    return tuple(eval_root(f.rs, f.omega_values, f.rs.simple_root(i)) for i in f.rs.indices)


def test_catalog_contents(catalog):
    per = {}
    for f in catalog.values():
        per[f.system] = per.get(f.system, 0) + 1
    assert per == {"A1": 4, "A2": 9, "C2": 7, "G2": 10, "A1xA1": 16}
    assert {lab for lab in catalog if lab.startswith("A2.")} == {
        "A2.t_a", "A2.t_b", "A2.t_c", "A2.t_d", "A2.t_e", "A2.t_f", "A2.t_g", "A2.t_o", "A2.t_b*"}
    assert resolve_label("A1", "t_o") == "A1.t_o+"
    with pytest.raises(KeyError):
        resolve_label("A1", "t_z")


def test_validate_examples(catalog):
    f = catalog["C2.t_b"]
    P, Z = pz_sets(f.rs, f.omega_values, ctx)
    assert names(f.rs, P) == {"a1", "a1+a2", "a1+2a2"} and names(f.rs, Z) == {"a2"}
    f = catalog["G2.t_i"]
    P, Z = pz_sets(f.rs, f.omega_values, ctx)
    assert names(f.rs, P) == {"a2", "a1+a2"} and names(f.rs, Z) == {"a1"}
    f = catalog["A1.t_o-"]
    P, Z = pz_sets(f.rs, f.omega_values, ctx)
    assert not P and names(f.rs, Z) == {"a1"} and f.omega_values.omega_values == (Monomial(6, 0),)


def test_pinned_values(catalog):
    assert catalog["A1.t_a"].omega_values.omega_values == (q(1),)
    assert catalog["A2.t_a"].omega_values.omega_values == (q(2), q(2))
    z3, m1 = Monomial(4, 0), Monomial(6, 0)
    expect = {
        "A2.t_c": (q(0), q(2)),
        "C2.t_b": (q(2), q(0)),
        "C2.t_d": (q(0), q(2)),
        "C2.t_e": (q(2), q(-1)),
        "C2.t_c": (q(2), m1),
        "G2.t_c": (q(2), z3),
        "G2.t_d": (q(2), m1),
        "G2.t_e": (q(2), q(0)),
        "G2.t_f": (q(2), Monomial(0, -4)),
        "G2.t_g": (q(2), q(-1)),
        "G2.t_i": (q(0), q(2)),
        "G2.t_j": (q(-3), q(2)),
    }
    for lab, vals in expect.items():
        assert alpha_values(catalog[lab]) == vals, lab


def test_generic_exponent_is_minimal(catalog):
    generic = [f for f in catalog.values() if f.generic_k is not None]
    assert {f.label for f in generic} >= {"A1.t_b", "A2.t_b", "A2.t_e", "A2.t_f", "A2.t_g",
                                          "C2.t_f", "C2.t_g", "G2.t_b", "G2.t_h"}
    for f in generic:
        rs, spec = f.rs, f.spec
        for k in range(1, f.generic_k):
            try:
                t = _weight(rs, spec.basis, spec.values, ctx, k)
            except ValueError:
                continue
            assert pz_sets(rs, t, ctx) != (f.expected_P, f.expected_Z)


def test_validation_error_on_wrong_table():
    spec = next(s for s in all_specs() if s.label == "C2.t_b")
    bad = replace(spec, P=("a1",))
    with pytest.raises(FixtureValidationError):
        validate(realize(bad, ctx))


def test_config_error_for_small_field():
    with pytest.raises(ConfigError):
        fixture_catalog(FieldContext(4, 6))
    assert len(fixture_catalog(FieldContext(4, 6), systems=["A1"])) == 4
    with pytest.raises(ConfigError):
        fixture_catalog(FieldContext(12, 2), labels=["G2.t_f"])


def test_other_field_gives_same_inventory(reports):
    f24 = fixture_catalog(FieldContext(24, 12), labels=["C2.t_b"])[0]
    r = reconstruct_inventory(f24)
    assert not r.diffs
    key = lambda rep: sorted((m.dim, m.support) for m in rep.modules)
    assert key(r) == key(reports["C2.t_b"])


def test_reconstruct_examples(reports):
    r = reports["C2.t_a"]
    assert sorted(m.dim for m in r.modules) == [1, 1, 3, 3] and all(m.calibrated for m in r.modules)
    r = reports["C2.t_d"]
    assert [m.dim for m in r.modules] == [4, 4] and not any(m.calibrated for m in r.modules)
    assert sum("induced" in c for m in r.modules for c in m.constructions) == 2
    r = reports["G2.t_e"]
    assert sorted(m.dim for m in r.modules) == [1, 1, 2, 3, 3]


def test_invariants(reports):
    for lab, r in reports.items():
        assert not r.diffs, (lab, r.diffs)
        order = len(enumerate_weyl(r.fixture.rs))
        assert sum(m.dim * m.multiplicity for m in r.modules) == order
    star = {m.J: m.tempered for m in reports["A2.t_b*"].modules}
    assert star[("a2",)] is True and star[()] is False
    assert not any(m.tempered for m in reports["A2.t_b"].modules)


def test_negative_control(catalog):
    spec = catalog["A2.t_a"].spec
    e = spec.modules[0]
    broken = replace(spec, modules=(replace(e, tempered=not e.tempered),) + spec.modules[1:])
    rep = full_report(fixtures=[realize(broken, ctx)])
    assert rep.diff_count >= 1 and rep.exit_code != 0


def test_full_report_restricted_and_parallel():
    a = full_report(systems=["A1"])
    assert len(a.entries) == 4 and a.exit_code == 0
    b = full_report(systems=["A1"], jobs=2)
    assert a.to_json() == b.to_json()


def test_json_schema_order(full):
    data = json.loads(full.to_json())
    first = data["fixtures"][0]
    assert list(first)[:9] == ["label", "system", "omega_values", "P", "Z", "orbit_size", "components",
                               "modules", "composition_of_principal"]
    assert list(first)[-2:] == ["metadata", "diffs"]
    assert list(first["modules"][0])[:8] == ["dim", "support", "weight_dims", "calibrated", "J", "tempered",
                                            "square_integrable", "irreducible"]
    assert set(first["metadata"]) == {"langlands", "indexing_triple"}
    assert [f["label"] for f in data["fixtures"]] == [s.label for s in all_specs()]


def test_csv_one_row_per_expected_module(full, catalog):
    rows = list(csv.DictReader(io.StringIO(full.to_csv())))
    assert len(rows) == sum(len(f.expected_modules) for f in catalog.values())
    assert all(r["found"] == "True" and r["calibrated_ok"] == "True" for r in rows)


def test_export_graphs(tmp_path):
    paths = export_graphs(tmp_path, labels=["A2.t_d", "C2.t_g"])
    text = {p.name: p.read_text() for p in paths}
    assert set(text) == {"A2.t_d.dot", "C2.t_g.dot"}
    assert text["A2.t_d.dot"].count(" -- ") == 0 and text["A2.t_d.dot"].count("[label=") == 3
    assert text["C2.t_g.dot"].count(" -- ") == 6
    again = export_graphs(tmp_path / "b", labels=["A2.t_d", "C2.t_g"])
    assert {p.name: p.read_bytes() for p in again} == {k: v.encode() for k, v in text.items()}


def test_regular_unitary_weight_has_one_component():
    G2 = root_system("G2")
    t = TorusWeight((Monomial(1, 0), Monomial(2, 0)))
    assert len(orbit(G2, t)) == 12
    assert len(components(build_graph(G2, t, ctx))) == 1
