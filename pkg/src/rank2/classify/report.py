"""Aggregated verification report over the fixture catalog, and graph export."""
from __future__ import annotations

import csv
import io
import json
import os
import re
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..calibration import build_graph, to_dot
from ..scalars import FieldContext
from .fixtures import CentralCharFixture, fixture_catalog
from .inventory import ClassReport, _support_key, reconstruct_inventory

CSV_FIELDS = (
    "label",
    "system",
    "dim",
    "J",
    "support",
    "tempered",
    "square_integrable",
    "found",
    "calibrated_ok",
    "tempered_ok",
    "square_integrable_ok",
    "multiplicity",
    "langlands",
    "indexing_triple",
)


def expected_rows(r: ClassReport) -> list[dict]:
    """One row per expected module, annotated with what was found."""
    found = {(m.dim, _support_key(m.support)): m for m in r.modules}
    rows = []
    for e in r.fixture.expected_modules:
        m = found.get((e.dim, _support_key(e.support)))
        rows.append(
            {
                "label": r.fixture.label,
                "system": r.fixture.system,
                "dim": e.dim,
                "J": "{" + ",".join(e.J) + "}" if e.J is not None else "nc",
                "support": " ".join(f"{w}:{c}" for w, c in e.support),
                "tempered": e.tempered,
                "square_integrable": e.square_integrable,
                "found": m is not None,
                "calibrated_ok": m is not None and m.calibrated == e.calibrated,
                "tempered_ok": m is not None and m.tempered == e.tempered,
                "square_integrable_ok": m is not None and m.square_integrable == e.square_integrable,
                "multiplicity": m.multiplicity if m is not None else 0,
                "langlands": e.langlands,
                "indexing_triple": e.triple,
            }
        )
    return rows


@dataclass
class Entry:
    """Serializable outcome for one fixture."""

    report: dict
    rows: list[dict]

    @property
    def diffs(self) -> list[str]:
        return self.report["diffs"]


def _entry(r: ClassReport) -> Entry:
    return Entry(r.as_dict(), expected_rows(r))


def _work(job: tuple[str, int, int]) -> Entry:
    label, n, d = job
    (f,) = fixture_catalog(FieldContext(n, d), labels=[label])
    return _entry(reconstruct_inventory(f))


@dataclass
class FullReport:
    entries: list[Entry]

    @property
    def diff_count(self) -> int:
        return sum(len(e.diffs) for e in self.entries)

    @property
    def exit_code(self) -> int:
        return 0 if self.diff_count == 0 else 1

    def to_json(self) -> str:
        return json.dumps({"fixtures": [e.report for e in self.entries]}, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for e in self.entries:
            w.writerows(e.rows)
        return buf.getvalue()

    def to_text(self) -> str:
        out = []
        for e in self.entries:
            r = e.report
            status = "ok" if not r["diffs"] else f"{len(r['diffs'])} diff(s)"
            out.append(
                f"{r['label']}  P={{{', '.join(r['P'])}}}  Z={{{', '.join(r['Z'])}}}"
                f"  orbit={r['orbit_size']}  {status}"
            )
            for m in r["modules"]:
                J = m["J"] if m["J"] == "nc" else "{" + ", ".join(m["J"]) + "}"
                sup = " ".join(f"{w}:{c}" for w, c in zip(m["support"], m["weight_dims"]))
                flags = "tempered" if m["tempered"] else "-"
                if m["square_integrable"]:
                    flags += ",sq-int"
                out.append(f"  dim {m['dim']:<2} x{m['multiplicity']}  J={J:<24} {flags:<16} {sup}")
            out.extend(f"  DIFF {d}" for d in r["diffs"])
        out.append(f"{len(self.entries)} fixtures, {self.diff_count} diffs")
        return "\n".join(out) + "\n"


def default_jobs() -> int:
    env = os.environ.get("RANK2_JOBS")
    return max(1, int(env)) if env else 1


def full_report(
    ctx: FieldContext | None = None,
    systems: Sequence[str] | None = None,
    labels: Sequence[str] | None = None,
    jobs: int | None = None,
    fixtures: Iterable[CentralCharFixture] | None = None,
) -> FullReport:
    """Reconstruct every selected fixture; entries keep catalog order.

    ``fixtures`` bypasses the catalog (used for negative controls) and is
    always run in-process.
    """
    ctx = ctx or FieldContext()
    if fixtures is not None:
        return FullReport([_entry(reconstruct_inventory(f)) for f in fixtures])
    # realizing up front surfaces configuration errors before any work
    selected = fixture_catalog(ctx, systems, labels)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(selected) <= 1:
        return FullReport([_entry(reconstruct_inventory(f)) for f in selected])
    work = [(f.label, ctx.n, ctx.d) for f in selected]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return FullReport(list(pool.map(_work, work)))


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dot_filename(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.+-]", "_", label) + ".dot"


def graph_dot(f: CentralCharFixture) -> str:
    return to_dot(build_graph(f.rs, f.omega_values, f.ctx), f.label)


def export_graphs(
    out_dir: str | os.PathLike,
    ctx: FieldContext | None = None,
    systems: Sequence[str] | None = None,
    labels: Sequence[str] | None = None,
) -> list[Path]:
    """One DOT file per selected fixture; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for f in fixture_catalog(ctx, systems, labels):
        p = out / dot_filename(f.label)
        write_atomic(p, graph_dot(f))
        paths.append(p)
    return paths
