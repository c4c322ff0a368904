"""Command-line front end: ``rank2 verify-all | module | graph | factors | catalog``."""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass

from .calibration import build_graph, components, is_placed_skew, tableaux
from .classify.fixtures import SYSTEM_ORDER, ConfigError, fixture_catalog, resolve_label
from .classify.report import full_report, graph_dot, write_atomic
from .heckemod.module import MINUS, PLUS, CharacterError, ModuleRep, build_calibrated, build_induced, build_principal
from .heckemod.relations import check_relations
from .heckemod.structure import composition_factors, is_irreducible
from .heckemod.weights import is_calibrated, temperedness, weight_decomposition
from .scalars import FieldContext
from .torus import orbit, w_action

EXIT_OK, EXIT_DIFFS, EXIT_ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class Config:
    n: int = 12
    d: int = 6
    fmt: str = "text"
    output: str | None = None
    systems: tuple[str, ...] = ()
    labels: tuple[str, ...] = ()
    dump_matrices: bool = False
    jobs: int | None = None

    @property
    def ctx(self) -> FieldContext:
        return FieldContext(self.n, self.d)


def _emit(cfg: Config, text: str) -> None:
    if cfg.output:
        write_atomic(cfg.output, text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _fixture(cfg: Config, system: str, name: str):
    try:
        label = resolve_label(system, name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    (f,) = fixture_catalog(cfg.ctx, labels=[label])
    return f


# ---------------------------------------------------------------------------
# commands


def cmd_verify_all(cfg: Config) -> int:
    if cfg.fmt == "dot":
        raise UsageError("verify-all supports json, csv and text")
    rep = full_report(cfg.ctx, cfg.systems or None, cfg.labels or None, cfg.jobs)
    text = {"json": rep.to_json, "csv": rep.to_csv, "text": rep.to_text}[cfg.fmt]()
    _emit(cfg, text)
    if cfg.output:
        print(f"{len(rep.entries)} fixtures, {rep.diff_count} diffs", file=sys.stderr)
    return rep.exit_code


def _parse_J(rs, text: str):
    try:
        return frozenset(rs.parse_root(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _construct(cfg: Config, f, construction: str, j: str | None, i: str | None, sign: str, at: str) -> ModuleRep:
    rs, t, ctx = f.rs, f.omega_values, f.ctx
    if construction == "principal":
        return build_principal(rs, t, ctx, verify=False)
    if construction == "calibrated":
        if j is None:
            raise UsageError("calibrated needs --j")
        J = _parse_J(rs, j)
        try:
            shape = tableaux(rs, t, J, ctx)
        except ValueError:
            raise UsageError(f"J = {{{j}}} is not a subset of P(t)") from None
        if shape is None:
            raise UsageError(f"no standard tableaux for J = {{{j}}}")
        if not is_placed_skew(rs, shape, ctx):
            raise UsageError(f"(t, J = {{{j}}}) is not a placed skew shape")
        return build_calibrated(rs, shape, ctx, verify=False)
    if i is None:
        raise UsageError("induced needs --i")
    try:
        I = tuple(sorted({int(x) for x in i.split(",")}))
    except ValueError:
        raise UsageError(f"bad index list {i!r}") from None
    if any(k not in rs.indices for k in I):
        raise UsageError(f"indices {I} out of range for {rs.label}")
    try:
        w = rs.element(tuple(int(c) for c in at[1::2])) if at != "e" else rs.identity()
    except (ValueError, KeyError):
        raise UsageError(f"bad orbit word {at!r}") from None
    base = w_action(rs, w, t)
    try:
        return build_induced(rs, I, base, {k: sign for k in I}, ctx, verify=False)
    except CharacterError as exc:
        raise UsageError(str(exc)) from None


def _matrices(m: ModuleRep) -> dict:
    def fmt(a):
        return [[m.ctx.scalar_str(x) for x in row] for row in a]

    return {
        **{f"T{k + 1}": fmt(a) for k, a in enumerate(m.T)},
        **{f"X^omega{k + 1}": fmt(a) for k, a in enumerate(m.X)},
    }


def module_summary(f, m: ModuleRep, dump: bool = False) -> dict:
    rs = f.rs
    rel = check_relations(rs, m)
    verdict = is_irreducible(rs, m)
    temp, sq = temperedness(rs, m)
    names = {p.weight: p.rep.name() for p in orbit(rs, f.omega_values)}
    out = {
        "fixture": f.label,
        "origin": m.origin,
        "dim": m.dim,
        "basis": list(m.labels),
        "relations_ok": rel.ok,
        "relation_failures": list(rel.failures),
        "weights": [
            {"weight": names[ws.weight], "dim_gen": ws.dim_gen, "dim_eigen": ws.dim_eigen}
            for ws in weight_decomposition(rs, m)
        ],
        "calibrated": is_calibrated(rs, m),
        "irreducible": verdict.irreducible,
        "irreducibility_method": verdict.method,
        "tempered": temp,
        "square_integrable": sq,
    }
    if dump:
        out["matrices"] = _matrices(m)
    return out


def _summary_text(s: dict) -> str:
    lines = [
        f"{s['fixture']} {s['origin']}",
        f"  dim {s['dim']}",
        f"  relations {'ok' if s['relations_ok'] else 'FAILED ' + ', '.join(s['relation_failures'])}",
        f"  {'irreducible' if s['irreducible'] else 'reducible'} ({s['irreducibility_method']})",
        f"  calibrated {str(s['calibrated']).lower()}",
        f"  tempered {str(s['tempered']).lower()}, square integrable {str(s['square_integrable']).lower()}",
        "  weights: " + " ".join(f"{w['weight']}:{w['dim_gen']}/{w['dim_eigen']}" for w in s["weights"]),
    ]
    for name, mat in s.get("matrices", {}).items():
        lines.append(f"  {name}:")
        lines.extend("    [" + ", ".join(row) + "]" for row in mat)
    return "\n".join(lines) + "\n"


def cmd_module(cfg: Config, system: str, label: str, construction: str, j=None, i=None, sign=PLUS, at="e") -> int:
    f = _fixture(cfg, system, label)
    m = _construct(cfg, f, construction, j, i, sign, at)
    s = module_summary(f, m, cfg.dump_matrices)
    _emit(cfg, _json(s) if cfg.fmt == "json" else _summary_text(s))
    return EXIT_OK if s["relations_ok"] else EXIT_ERROR


def cmd_graph(cfg: Config, system: str, label: str) -> int:
    f = _fixture(cfg, system, label)
    g = build_graph(f.rs, f.omega_values, f.ctx)
    if cfg.fmt == "json":
        text = _json(
            {
                "fixture": f.label,
                "vertices": [p.rep.name() for p in g.vertices],
                "edges": [[g.vertices[a].rep.name(), g.vertices[b].rep.name(), i] for a, b, i in g.edges],
                "components": [[p.rep.name() for p in c] for c in components(g)],
            }
        )
    elif cfg.fmt == "text":
        comps = components(g)
        text = f"{f.label}: {len(g.vertices)} vertices, {len(g.edges)} edges, components " + " | ".join(
            ",".join(p.rep.name() for p in c) for c in comps
        ) + "\n"
    else:
        text = graph_dot(f)
    _emit(cfg, text)
    return EXIT_OK


def cmd_factors(cfg: Config, system: str, label: str) -> int:
    f = _fixture(cfg, system, label)
    rs, t = f.rs, f.omega_values
    facs = composition_factors(rs, build_principal(rs, t, f.ctx, verify=False))
    counts = Counter(fa.descriptor for fa in facs)
    seen, rows = set(), []
    for fa in facs:
        d = fa.descriptor
        if d in seen:
            continue
        seen.add(d)
        temp, sq = temperedness(rs, fa.module)
        rows.append(
            {
                "dim": d[0],
                "support": [w for w, _ in d[1]],
                "weight_dims": [c for _, c in d[1]],
                "multiplicity": counts[d],
                "calibrated": is_calibrated(rs, fa.module),
                "tempered": temp,
                "square_integrable": sq,
            }
        )
    rows.sort(key=lambda r: (min(len(w) for w in r["support"]), r["support"][0], r["dim"]))
    if cfg.fmt == "json":
        text = _json({"fixture": f.label, "factors": rows})
    else:
        lines = [f"{f.label}: M(t) has {len(facs)} composition factors, {len(rows)} distinct"]
        for r in rows:
            sup = " ".join(f"{w}:{c}" for w, c in zip(r["support"], r["weight_dims"]))
            flag = "calibrated" if r["calibrated"] else "nc"
            lines.append(f"  dim {r['dim']:<2} x{r['multiplicity']}  {flag:<10} {sup}")
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return EXIT_OK


def cmd_catalog(cfg: Config) -> int:
    fixtures = fixture_catalog(cfg.ctx, cfg.systems or None, cfg.labels or None)
    rows = [
        {
            "label": f.label,
            "system": f.system,
            "omega_values": f.omega_values.to_pairs(),
            "P": list(f.spec.P),
            "Z": list(f.spec.Z),
            "expected_modules": len(f.expected_modules),
        }
        for f in fixtures
    ]
    if cfg.fmt == "json":
        text = _json({"fixtures": rows})
    else:
        text = "".join(
            f"{r['label']:<18} {str(r['omega_values']):<22} P={{{', '.join(r['P'])}}} Z={{{', '.join(r['Z'])}}}\n"
            for r in rows
        )
    _emit(cfg, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=12, help="cyclotomic order N (default 12)")
    common.add_argument("--d", type=int, default=6, help="q-root denominator D, q = v^D (default 6)")
    common.add_argument("--format", choices=("json", "csv", "dot", "text"), default=None)
    common.add_argument("-o", "--output", help="write output to this file")
    common.add_argument("--dump-matrices", action="store_true")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default RANK2_JOBS or 1)")

    p = argparse.ArgumentParser(prog="rank2", description="Exact representation theory of rank-two affine Hecke algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-all", parents=[common], help="reconstruct and diff every fixture")
    v.add_argument("--system", action="append", choices=SYSTEM_ORDER, default=[])
    v.add_argument("--label", action="append", default=[], help="restrict to a fixture label")

    m = sub.add_parser("module", parents=[common], help="construct one module and report verdicts")
    m.add_argument("system")
    m.add_argument("label")
    m.add_argument("construction", choices=("calibrated", "principal", "induced"))
    m.add_argument("--j", help='calibration set, e.g. "a1,a1+a2"')
    m.add_argument("--i", help="parabolic indices for induction, e.g. 1 or 1,2")
    m.add_argument("--sign", choices=(PLUS, MINUS), default=PLUS)
    m.add_argument("--at", default="e", help="induce from the orbit point w t (word like s2s1)")

    for name, helptext in (("graph", "calibration graph"), ("factors", "composition factors of M(t)")):
        g = sub.add_parser(name, parents=[common], help=helptext)
        g.add_argument("system")
        g.add_argument("label")

    c = sub.add_parser("catalog", parents=[common], help="list fixtures")
    c.add_argument("--system", action="append", choices=SYSTEM_ORDER, default=[])
    c.add_argument("--label", action="append", default=[])
    return p


_DEFAULT_FORMAT = {"graph": "dot"}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = Config(
        n=args.n,
        d=args.d,
        fmt=args.format or _DEFAULT_FORMAT.get(args.command, "text"),
        output=args.output,
        systems=tuple(getattr(args, "system", ()) if args.command in ("verify-all", "catalog") else ()),
        labels=tuple(getattr(args, "label", ()) if args.command in ("verify-all", "catalog") else ()),
        dump_matrices=args.dump_matrices,
        jobs=args.jobs,
    )
    try:
        if cfg.n < 1 or cfg.d < 1:
            raise ConfigError("--n and --d must be positive")
        if cfg.fmt == "csv" and args.command != "verify-all":
            raise UsageError("csv output is only available for verify-all")
        if args.command == "verify-all":
            return cmd_verify_all(cfg)
        if args.command == "module":
            return cmd_module(cfg, args.system, args.label, args.construction, args.j, args.i, args.sign, args.at)
        if args.command == "graph":
            return cmd_graph(cfg, args.system, args.label)
        if args.command == "factors":
            return cmd_factors(cfg, args.system, args.label)
        return cmd_catalog(cfg)
    except ConfigError as exc:
        print(f"rank2: configuration error: {exc}", file=sys.stderr)
    except (UsageError, OSError) as exc:
        print(f"rank2: error: {exc}", file=sys.stderr)
    except Exception as exc:  # internal failure, still a distinct exit code
        print(f"rank2: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
