"""Text formats: disk/ball sets (CSV with a dim header), complexes (JSON), timing tables (CSV)."""

from __future__ import annotations

import csv
import json
import math
import statistics
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

from .complex import BenchStats, CechComplex, ComplexLevel, LevelStats
from .geom2d import Disk
from .geom3d import Ball

META_PREFIX = "# meta: "


class FormatError(ValueError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, msg: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def fmt_float(x: float) -> str:
    return "%.17g" % x


# --- disk set files ---------------------------------------------------------


@dataclass
class DiskSet:
    dim: int
    elements: List
    meta: Optional[Dict] = None


def parse_disk_set(text: str) -> DiskSet:
    dim = None
    meta = None
    elements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if raw.startswith(META_PREFIX):
                try:
                    meta = json.loads(raw[len(META_PREFIX):])
                except json.JSONDecodeError as exc:
                    raise FormatError(f"bad metadata json: {exc.msg}", lineno) from None
            continue
        if dim is None:
            if not line.startswith("dim="):
                raise FormatError("expected header 'dim=2' or 'dim=3'", lineno)
            try:
                dim = int(line[4:])
            except ValueError:
                raise FormatError(f"bad dimension {line[4:]!r}", lineno) from None
            if dim not in (2, 3):
                raise FormatError(f"dimension must be 2 or 3, got {dim}", lineno)
            continue
        parts = line.split(",")
        if len(parts) != dim + 2:
            raise FormatError(f"expected {dim + 2} comma-separated fields, got {len(parts)}", lineno)
        try:
            idx = int(parts[0])
            vals = [float(p) for p in parts[1:]]
        except ValueError:
            raise FormatError(f"unparseable row {line!r}", lineno) from None
        if not all(math.isfinite(v) for v in vals):
            raise FormatError("non-finite value", lineno)
        if idx != len(elements):
            raise FormatError(f"ids must be contiguous from 0; expected {len(elements)}, got {idx}", lineno)
        if not vals[-1] > 0:
            raise FormatError(f"radius must be positive, got {vals[-1]!r}", lineno)
        cls = Disk if dim == 2 else Ball
        elements.append(cls(idx, tuple(vals[:-1]), vals[-1]))
    if dim is None:
        raise FormatError("empty file: missing 'dim=' header")
    if not elements:
        raise FormatError("file contains no elements")
    return DiskSet(dim, elements, meta)


def emit_disk_set(ds: DiskSet) -> str:
    out = [f"dim={ds.dim}"]
    if ds.meta is not None:
        out.append(META_PREFIX + json.dumps(ds.meta, sort_keys=True))
    for e in ds.elements:
        out.append(",".join([str(e.id)] + [fmt_float(c) for c in e.center] + [fmt_float(e.radius)]))
    return "\n".join(out) + "\n"


def read_disk_set(path) -> DiskSet:
    with open(path, encoding="utf-8") as fh:
        return parse_disk_set(fh.read())


def write_disk_set(path, ds: DiskSet) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_disk_set(ds))


# --- complex files ----------------------------------------------------------


def complex_to_dict(cx: CechComplex, witnesses: bool = False, timings: bool = True) -> Dict:
    levels = []
    for lvl in cx.levels:
        entry = {"k": lvl.dimension, "count": len(lvl), "simplices": [list(s) for s in lvl.sorted()]}
        if witnesses and lvl.witnesses is not None:
            entry["witnesses"] = [list(lvl.witnesses[s]) if s in lvl.witnesses else None for s in lvl.sorted()]
        levels.append(entry)
    stats = []
    for k in sorted(cx.stats.levels):
        st = cx.stats.levels[k]
        row = {"k": k, "candidates": st.candidates, "cech_count": st.cech_count, "vr_count": st.vr_count}
        if timings:
            row.update(generate_ns=st.generate_ns, verify_ns=st.verify_ns, total_ns=st.total_ns)
        stats.append(row)
    stats_block = {"levels": stats}
    if timings:
        stats_block["total_ns"] = cx.stats.total_ns
    return {"ambient_dim": cx.ambient_dim, "eps": cx.eps, "levels": levels, "stats": stats_block}


def emit_complex(cx: CechComplex, witnesses: bool = False, timings: bool = True) -> str:
    return json.dumps(complex_to_dict(cx, witnesses, timings), indent=1, sort_keys=True) + "\n"


def parse_complex(text: str) -> CechComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad complex json: {exc.msg}", exc.lineno) from None
    try:
        levels = []
        for entry in data["levels"]:
            lvl = ComplexLevel(int(entry["k"]))
            ws = entry.get("witnesses")
            for i, s in enumerate(entry["simplices"]):
                w = ws[i] if ws is not None else None
                lvl.insert(tuple(s), tuple(w) if w is not None else None)
            if len(lvl) != entry.get("count", len(lvl)):
                raise FormatError(f"level {lvl.dimension}: count does not match simplex list")
            levels.append(lvl)
        stats = BenchStats(total_ns=data.get("stats", {}).get("total_ns", 0))
        for row in data.get("stats", {}).get("levels", []):
            stats.levels[row["k"]] = LevelStats(**row)
        return CechComplex(int(data["ambient_dim"]), levels, stats, float(data.get("eps", 0.0)))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing or malformed field: {exc}") from None


def read_complex(path) -> CechComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def write_complex(path, cx: CechComplex, witnesses: bool = False, timings: bool = True) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_complex(cx, witnesses, timings))


def diff_complexes(a: CechComplex, b: CechComplex) -> Dict[int, Dict[str, List]]:
    """Per-level symmetric difference; empty dict when the level sets agree."""
    sa, sb = a.simplex_sets(), b.simplex_sets()
    out = {}
    for k in range(max(len(sa), len(sb))):
        x = sa[k] if k < len(sa) else set()
        y = sb[k] if k < len(sb) else set()
        if x != y:
            out[k] = {"only_a": sorted(x - y), "only_b": sorted(y - x)}
    return out


# --- timing tables ----------------------------------------------------------

TIMING_FIELDS = ["k", "candidates", "cech_count", "vr_count", "verify_ns", "total_ns", "run_index", "mode"]


def timing_rows(mode: str, runs: Sequence[BenchStats]) -> List[Dict]:
    """Per-run rows plus 'mean' and (for >1 run) 'std' summary rows per dimension.

    k = 'all' rows carry the end-to-end total of a run; k = 1 is the
    neighborhood graph.
    """
    rows = []
    ks = sorted({k for st in runs for k in st.levels if k >= 1})
    for i, st in enumerate(runs):
        for k in ks:
            lv = st.levels.get(k, LevelStats(k))
            rows.append(dict(k=k, candidates=lv.candidates, cech_count=lv.cech_count, vr_count=lv.vr_count,
                             verify_ns=lv.verify_ns, total_ns=lv.total_ns, run_index=i, mode=mode))
        rows.append(dict(k="all", candidates=None, cech_count=None, vr_count=None, verify_ns=None,
                         total_ns=st.total_ns, run_index=i, mode=mode))
    summaries = [("mean", statistics.fmean)]
    if len(runs) > 1:
        summaries.append(("std", statistics.stdev))
    for label, fn in summaries:
        for k in ks + ["all"]:
            per = [r for r in rows if r["k"] == k and isinstance(r["run_index"], int)]
            first = per[0]
            rows.append(dict(
                k=k,
                candidates=first["candidates"],
                cech_count=first["cech_count"],
                vr_count=first["vr_count"],
                verify_ns=fn([r["verify_ns"] for r in per]) if first["verify_ns"] is not None else None,
                total_ns=fn([r["total_ns"] for r in per]),
                run_index=label,
                mode=mode,
            ))
    return rows


def write_timing_table(path_or_file, rows: Iterable[Dict]) -> None:
    own = isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__")
    fh = open(path_or_file, "w", newline="", encoding="utf-8") if own else path_or_file
    try:
        w = csv.DictWriter(fh, fieldnames=TIMING_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: ("" if r.get(k) is None else _cell(r[k])) for k in TIMING_FIELDS})
    finally:
        if own:
            fh.close()


def _cell(v):
    if isinstance(v, float):
        return f"{v:.1f}"
    return v


def read_timing_table(path) -> List[Dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))
