"""Command line: ``gcech build | gen | bench | compare``.

Exit status 0 on success, 1 on validation or usage errors, 2 on internal errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import bench, datagen
from .construct import BuildOptions, build_complex
from .geom2d import DEFAULT_EPS, Tolerance
from .io import (
    DiskSet,
    FormatError,
    diff_complexes,
    read_complex,
    read_disk_set,
    timing_rows,
    write_complex,
    write_disk_set,
    write_timing_table,
)

log = logging.getLogger("gcech")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path: str, dim: Optional[int]) -> DiskSet:
    ds = read_disk_set(path)
    if dim is not None and dim != ds.dim:
        raise UsageError(f"--dim {dim} does not match file header dim={ds.dim}")
    return ds


def cmd_build(args) -> int:
    ds = _load(args.input, args.dim)
    mode = args.mode
    helly = args.helly
    if mode != "improved" and helly != "none":
        log.info("helly variant only applies to the improved mode; ignoring --helly %s", helly)
        helly = "none"
    opts = BuildOptions(
        max_dimension=args.max_k,
        tol=Tolerance(args.eps),
        method=mode,
        helly=helly,
        workers=args.threads,
        deterministic=args.deterministic,
        keep_witnesses=args.witnesses,
    )
    if mode == "meb":
        from .baselines import equal_radius

        if equal_radius(ds.elements, opts.tol) is None:
            raise UsageError("--mode meb requires all radii to be equal")
    cx = build_complex(ds.elements, opts)
    write_complex(args.output, cx, witnesses=args.witnesses, timings=not args.deterministic)
    log.info("levels: %s", cx.counts())
    return 0


def cmd_gen(args) -> int:
    if args.preset:
        cfg = datagen.preset(args.preset, args.seed)
    else:
        if args.extent is None:
            raise UsageError("either --preset or --extent is required")
        cfg = datagen.GenConfig(
            extent=tuple(args.extent),
            distribution=args.distribution,
            n=args.n,
            min_spacing=args.spacing,
            R=args.R,
            alpha=(args.alpha_lo, args.alpha_hi),
            seed=args.seed if args.seed is not None else 0,
        )
    elements = datagen.generate(cfg)
    meta = cfg.to_meta()
    if args.preset:
        meta["preset"] = args.preset
    write_disk_set(args.output, DiskSet(cfg.dim, elements, meta))
    log.info("wrote %d elements to %s", len(elements), args.output)
    return 0


def cmd_bench(args) -> int:
    ds = _load(args.input, None)
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    unknown = [m for m in modes if m not in bench.MODES]
    if unknown:
        raise UsageError(f"unknown modes {unknown}; choose from {sorted(bench.MODES)}")
    results = bench.run_bench(ds.elements, modes, args.runs, Tolerance(args.eps), args.max_k)
    rows = []
    for mode in modes:
        rows.extend(timing_rows(mode, results[mode]))
    write_timing_table(args.output, rows)
    for mode in modes:
        log.info("%s: mean total %.3f ms", mode, bench.mean_total_ns(results[mode]) / 1e6)
    return 0


def cmd_compare(args) -> int:
    a = read_complex(args.a)
    b = read_complex(args.b)
    if a.ambient_dim != b.ambient_dim:
        raise UsageError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    diff = diff_complexes(a, b)
    if not diff:
        print("identical")
        return 0
    for k, d in sorted(diff.items()):
        print(f"k={k}: only in A {json.dumps(d['only_a'])}; only in B {json.dumps(d['only_b'])}")
    return 3


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gcech", description="Generalized Čech complexes of disks and balls.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a complex from a disk/ball set file")
    b.add_argument("input")
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--dim", type=int, choices=(2, 3))
    b.add_argument("--max-k", type=int, default=None)
    b.add_argument("--mode", choices=("improved", "reference", "meb"), default="improved")
    b.add_argument("--helly", choices=("none", "subsets", "faces"), default="faces")
    b.add_argument("--eps", type=float, default=DEFAULT_EPS)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--deterministic", action="store_true", help="sorted iteration; omit timings from the output")
    b.add_argument("--witnesses", action="store_true", help="keep and emit witness points for every level")
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("gen", help="generate a dataset")
    g.add_argument("--preset", choices=sorted(datagen.PRESETS))
    g.add_argument("--extent", type=float, nargs="+")
    g.add_argument("--distribution", choices=("uniform", "poisson"), default="uniform")
    g.add_argument("--n", type=int)
    g.add_argument("--spacing", type=float)
    g.add_argument("--R", type=float, default=10.0)
    g.add_argument("--alpha-lo", type=float, default=0.3)
    g.add_argument("--alpha-hi", type=float, default=1.0)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("bench", help="time several modes over repeated runs")
    t.add_argument("input")
    t.add_argument("--modes", default="improved,reference")
    t.add_argument("--runs", type=int, default=7)
    t.add_argument("--max-k", type=int, default=None)
    t.add_argument("--eps", type=float, default=DEFAULT_EPS)
    t.add_argument("-o", "--output", required=True)
    t.set_defaults(func=cmd_bench)

    c = sub.add_parser("compare", help="diff the level sets of two complex files")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_compare)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, FormatError, ValueError, KeyError, OSError) as exc:
        print(f"gcech {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - last resort
        print(f"gcech {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
