"""The fourteen acceptance criteria, each checked exactly.

Each test prints one PASS/FAIL line; the session summary repeats them.
Dimension multisets and the square-integrable rows are transcribed here;
calibration sets and supports are taken from the fixture catalog.
"""
from __future__ import annotations

import os
import subprocess
import sys
from collections import Counter

from rank2.calibration import build_graph, components
from rank2.classify.inventory import _support_key
from rank2.heckemod.module import MINUS, PLUS, build_induced, build_principal
from rank2.heckemod import relations
from rank2.heckemod.structure import composition_factors, is_irreducible
from rank2.heckemod.weights import lemma_bound_violations, support, tau_checks, weight_decomposition
from rank2.rootdata import enumerate_weyl, minimal_coset_reps
from rank2.torus import orbit, w_action


def _line(num: int, ok: bool, what: str) -> None:
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {what}")


def _dims(report) -> list[int]:
    return sorted(m.dim for m in report.modules)


def _by_triple(report, triple):
    e = next(e for e in report.fixture.expected_modules if e.triple == triple)
    key = (e.dim, _support_key(e.support))
    return next(m for m in report.modules if (m.dim, _support_key(m.support)) == key)


def _check_dims(reports, table: dict[str, list[int]]) -> list[str]:
    return [f"{lab}: {_dims(reports[lab])} != {sorted(want)}" for lab, want in table.items()
            if _dims(reports[lab]) != sorted(want)]


def _calibration_column(reports, system: str) -> list[str]:
    bad = []
    for lab, r in reports.items():
        if r.fixture.system != system:
            continue
        for e in r.fixture.expected_modules:
            m = next((m for m in r.modules if (m.dim, _support_key(m.support)) == (e.dim, _support_key(e.support))), None)
            if m is None:
                bad.append(f"{lab}: missing {e.dim} {e.support}")
            elif m.calibrated != e.calibrated or (e.calibrated and set(m.J) != set(e.J)):
                bad.append(f"{lab}: {e.support} calibrated={m.calibrated} J={m.J}, table {e.J}")
    return bad


# ---------------------------------------------------------------------------


def test_criterion_01_relations(reports):
    bad = []
    for lab, r in reports.items():
        bad += [f"{lab}: {c['construction']}" for c in r.constructed if not c["relations_ok"]]
        bad += [f"{lab}: factor {m.dim}" for m in r.modules if not m.relations_ok]
        bad += [f"{lab}: {d}" for d in r.diffs if "relation" in d]
    n = sum(len(r.constructed) + len(r.modules) for r in reports.values())
    _line(1, not bad, f"check_relations on {n} constructed modules")
    assert not bad and n > 100


def test_criterion_02_A1(catalog):
    out = {}
    for lab in ("A1.t_a", "A1.t_b", "A1.t_o+", "A1.t_o-"):
        f = catalog[lab]
        M = build_principal(f.rs, f.omega_values, f.ctx)
        out[lab] = (M, composition_factors(f.rs, M))
    ok = sorted(fa.descriptor[0] for fa in out["A1.t_a"][1]) == [1, 1]
    M_b = out["A1.t_b"][0]
    ok &= M_b.dim == 2 and is_irreducible(M_b.rs, M_b).irreducible
    for lab in ("A1.t_o+", "A1.t_o-"):
        M = out[lab][0]
        ws = weight_decomposition(M.rs, M)
        ok &= is_irreducible(M.rs, M).irreducible and M.dim == 2
        ok &= [(w.dim_gen, w.dim_eigen) for w in ws] == [(2, 1)]
    _line(2, ok, "A1 principal series t_a, t_b, t_o+, t_o-")
    assert ok


def _swap_word(w: str) -> str:
    return w.translate(str.maketrans("12", "21"))


def _flipped(report) -> set:
    return {(m.dim, _support_key(tuple((_swap_word(w), c) for w, c in m.support))) for m in report.modules}


def _plain(report) -> set:
    return {(m.dim, _support_key(m.support)) for m in report.modules}


def test_criterion_03_A2(reports):
    table = {
        "A2.t_a": [1, 2, 2, 1], "A2.t_b": [3, 3], "A2.t_c": [3, 3], "A2.t_d": [3, 3],
        "A2.t_e": [6], "A2.t_f": [6], "A2.t_g": [6], "A2.t_o": [6],
    }
    bad = _check_dims(reports, table) + _calibration_column(reports, "A2")
    if _flipped(reports["A2.t_c"]) != _plain(reports["A2.t_d"]):
        bad.append("t_c/t_d not related by the diagram flip")
    if _flipped(reports["A2.t_e"]) != _plain(reports["A2.t_f"]):
        bad.append("t_e/t_f not related by the diagram flip")
    _line(3, not bad, "A2 dimension multisets, calibration column, diagram flip")
    assert not bad, bad


def test_criterion_04_C2(reports):
    table = {
        "C2.t_a": [1, 3, 3, 1], "C2.t_b": [3, 1, 1, 3], "C2.t_c": [2, 2, 2, 2], "C2.t_d": [4, 4],
        "C2.t_e": [4, 4], "C2.t_f": [4, 4], "C2.t_g": [4, 4],
    }
    bad = _check_dims(reports, table) + _calibration_column(reports, "C2")
    ones = {(lab, m.support[0][0]) for lab, r in reports.items() if r.fixture.system == "C2"
            for m in r.modules if m.dim == 1}
    want = {("C2.t_a", "e"), ("C2.t_b", "s2s1"), ("C2.t_b", "s1"), ("C2.t_a", "s1s2s1s2")}
    if ones != want:
        bad.append(f"one-dimensional modules at {sorted(ones)}")
    _line(4, not bad, "C2 dimension multisets, nc rows, the four one-dimensional modules")
    assert not bad, bad


def test_criterion_05_G2(reports):
    table = {
        "G2.t_a": [1, 5, 5, 1], "G2.t_b": [6, 6], "G2.t_c": [2, 4, 4, 2], "G2.t_d": [3, 3, 3, 3],
        "G2.t_e": [3, 1, 2, 1, 3], "G2.t_f": [6, 6], "G2.t_g": [6, 6], "G2.t_h": [6, 6],
        "G2.t_i": [6, 6], "G2.t_j": [6, 6],
    }
    bad = _check_dims(reports, table) + _calibration_column(reports, "G2")
    te = {frozenset(m.J) for m in reports["G2.t_e"].modules if m.calibrated}
    want = {frozenset({"a1"}), frozenset({"a1", "a1+a2"}), frozenset({"a1", "a1+a2", "a1+2a2"})}
    if te != want:
        bad.append(f"G2 t_e calibrated J sets {te}")
    _line(5, not bad, "G2 dimension multisets and calibrated J sets")
    assert not bad, bad


def test_criterion_06_G2_te_series(catalog):
    f = catalog["G2.t_e"]
    facs = composition_factors(f.rs, build_principal(f.rs, f.omega_values, f.ctx))
    dims = sorted(fa.descriptor[0] for fa in facs)
    count = Counter(fa.descriptor for fa in facs)
    sup = {d: dict(d[1]) for d in count}
    two = [d for d in count if d[0] == 2]
    ok = dims == [1, 1, 2, 2, 3, 3]
    ok &= len(two) == 1 and count[two[0]] == 2 and set(sup[two[0]]) == {"s2s1", "s1s2s1"}
    ok &= any(d[0] == 1 and sup[d] == {"s1": 1} for d in count)
    ok &= any(d[0] == 3 and sup[d].get("e") == 2 for d in count)
    # the starred mirrors
    ok &= any(d[0] == 1 and sup[d] == {"s2s1s2s1": 1} for d in count)
    ok &= any(d[0] == 3 and sup[d].get("s1s2s1s2s1") == 2 for d in count)
    _line(6, ok, "G2 M(t_e) factors {1,1,2,2,3,3}, the 2-dim one twice")
    assert ok, count


def test_criterion_07_kato(reports):
    bad = [lab for lab, r in reports.items() if r.principal_irreducible != (not r.P)]
    _line(7, not bad, f"M(t) irreducible iff P(t) empty over {len(reports)} fixtures")
    assert not bad, bad


def test_criterion_08_graphs(catalog):
    bad = []
    for lab, f in catalog.items():
        g = build_graph(f.rs, f.omega_values, f.ctx)
        got = sorted(len(c) for c in components(g))
        if got != sorted(len(c) for c in f.spec.components):
            bad.append(f"{lab}: {got}")
    sizes = {}
    for lab in ("C2.t_b", "A2.t_e", "G2.t_e"):
        f = catalog[lab]
        g = build_graph(f.rs, f.omega_values, f.ctx)
        sizes[lab] = (len(g.vertices), sorted(len(c) for c in components(g)))
    if sizes != {"C2.t_b": (4, [1, 1, 1, 1]), "A2.t_e": (3, [3]), "G2.t_e": (6, [1, 1, 1, 1, 2])}:
        bad.append(f"examples {sizes}")
    _line(8, not bad, "calibration graph components match the figures")
    assert not bad, bad


TAU_CASES = (
    ("A1.t_a", True), ("A1.t_o+", False),
    ("A2.t_a", True), ("A2.t_c", False),
    ("C2.t_a", True), ("C2.t_b", False),
    ("G2.t_a", True), ("G2.t_e", False),
    ("A1xA1.t_a*t_b", True), ("A1xA1.t_o+*t_a", False),
)


def test_criterion_09_tau(catalog):
    bad = []
    for lab, regular in TAU_CASES:
        f = catalog[lab]
        rs = f.rs
        if (len(orbit(rs, f.omega_values)) == len(enumerate_weyl(rs))) != regular:
            bad.append(f"{lab}: regularity")
        M = build_principal(rs, f.omega_values, f.ctx)
        bad += [f"{lab}: {x}" for x in tau_checks(rs, M, relations.lattice_samples(rs))]
    _line(9, not bad, "tau properties (b), (c), (d) on regular and non-regular M(t)")
    assert not bad, bad


def _induced_pair(f):
    rs, t, i = f.rs, f.omega_values, f.spec.induction
    st = w_action(rs, rs.element((i,)), t)
    return [(base, build_induced(rs, (i,), base, {i: sign}, f.ctx)) for sign, base in ((PLUS, t), (MINUS, st))]


def test_criterion_10_coset_counts(catalog):
    bad, dims = [], {}
    for lab, f in catalog.items():
        if f.spec.induction is None:
            continue
        for base, m in _induced_pair(f):
            want = Counter(w_action(f.rs, u, base) for u in minimal_coset_reps(f.rs, (f.spec.induction,)))
            got = support(f.rs, m)
            if dict(want) != got:
                bad.append(lab)
            dims.setdefault(lab, sorted(got.values(), reverse=True))
    if dims.get("C2.t_d") != [2, 1, 1] or dims.get("G2.t_g") != [2, 2, 2]:
        bad.append(f"C2.t_d {dims.get('C2.t_d')}, G2.t_g {dims.get('G2.t_g')}")
    _line(10, not bad, f"induced weight multiplicities equal coset counts ({len(dims)} fixtures)")
    assert not bad, bad


def test_criterion_11_lemma_bound(catalog, reports):
    bad, checked = [], 0
    for lab, r in reports.items():
        for m in r.modules:
            c, v = lemma_bound_violations(r.fixture.rs, m.module, r.fixture.ctx)
            checked += c
            bad += [f"{lab}: {x}" for x in v]
    f = catalog["C2.t_d"]
    _, m = _induced_pair(f)[0]
    c, v = lemma_bound_violations(f.rs, m, f.ctx)
    ok_td = c > 0 and not v and support(f.rs, m)[f.omega_values] == 2
    _line(11, not bad and ok_td and checked > 0, f"dimension bound at {checked + c} weights")
    assert not bad and ok_td and checked > 0, bad


# Square-integrable column of the Springer-correspondence tables, plus the
# representations named in the text after each table (no real central character).
SQ_INT_YES = {
    ("A1.t_a", "(t_a,e_a1,1)"),
    ("C2.t_a", "(t_a,e_a1+e_a2,1)"),
    ("C2.t_b", "(t_b,e_a1+a2,1)"),
    ("C2.t_b", "(t_b,e_a1+a2,-1)"),
    ("C2.t_c", "(t_c,e_a1+e_a1+2a2,1)"),
    ("G2.t_a", "(t_a,e_a1+e_a2,1)"),
    ("G2.t_e", "(t_e,e_a1+e_a1+2a2,(3))"),
    ("G2.t_e", "(t_e,e_a1+e_a1+2a2,(21))"),
    ("G2.t_c", "(t_c,e_a1+e_a1+3a2,1)"),
    ("G2.t_d", "(t_d,e_a1+e_a1+2a2,1)"),
}
SQ_INT_NO = {
    ("A1.t_o+", "(t_o,0,1)"),
    ("C2.t_e", "(t_e,e_a1,1)"),
    ("G2.t_j", "(t_j,e_a2,1)"),
    ("G2.t_g", "(t_g,e_a1,1)"),
}


def test_criterion_12_temperedness(reports):
    bad = []
    tempered, rows = set(), set()
    for lab, r in reports.items():
        if r.fixture.system == "A1xA1":
            continue
        for e in r.fixture.expected_modules:
            m = _by_triple(r, e.triple)
            if m.tempered:
                tempered.add((lab, e.triple))
            if e.langlands == "tempered":
                rows.add((lab, e.triple))
    rows.add(("A2.t_b*", "(s_2s_1t,e_a2,1)"))
    if tempered != rows:
        bad.append(f"tempered: extra {sorted(tempered - rows)}, missing {sorted(rows - tempered)}")
    for lab, triple in sorted(SQ_INT_YES | SQ_INT_NO):
        m = _by_triple(reports[lab], triple)
        if m.square_integrable != ((lab, triple) in SQ_INT_YES):
            bad.append(f"square integrable {lab} {triple}: computed {m.square_integrable}")
    sq = {(lab, e.triple) for lab, r in reports.items() if r.fixture.system in ("A1", "C2", "G2")
          for e in r.fixture.expected_modules if _by_triple(r, e.triple).square_integrable}
    if sq != SQ_INT_YES:
        bad.append(f"square-integrable set differs: {sorted(sq ^ SQ_INT_YES)}")
    _line(12, not bad, "tempered rows and square-integrable rows")
    for b in bad:
        print("   ", b)
    assert not bad, bad


def test_criterion_13_A1xA1(reports):
    bad = []
    a1 = {lab.split(".")[1]: len(r.modules) for lab, r in reports.items() if r.fixture.system == "A1"}
    for lab, r in reports.items():
        if r.fixture.system != "A1xA1":
            continue
        x, y = lab.split(".")[1].split("*")
        tens = [c for c in r.constructed if c["construction"].startswith("tensor")]
        if not all(c["relations_ok"] and c["irreducible"] for c in tens):
            bad.append(f"{lab}: tensor product failed")
        if not (len(tens) == len(r.modules) == a1[x] * a1[y]):
            bad.append(f"{lab}: {len(tens)} tensors, {len(r.modules)} irreducibles")
    _line(13, not bad and len(a1) == 4, "A1xA1 tensor products")
    assert not bad, bad


def test_criterion_14_determinism(full, tmp_path):
    out = tmp_path / "report.json"
    env = dict(os.environ, PYTHONHASHSEED="12345")
    proc = subprocess.run(
        [sys.executable, "-m", "rank2.cli", "verify-all", "--format", "json", "-o", str(out)],
        env=env, capture_output=True, text=True,
    )
    ok = proc.returncode == 0 and out.read_bytes() == full.to_json().encode()
    _line(14, ok, "two verify-all JSON runs are byte-identical")
    assert ok, proc.stderr
