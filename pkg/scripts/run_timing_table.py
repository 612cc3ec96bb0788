"""Bench improved vs reference on the desk-scale presets and write one CSV per preset.

    python scripts/run_timing_table.py --out results/ --runs 7
"""

import argparse
from pathlib import Path

from gcech import datagen
from gcech.bench import mean_level_ns, mean_total_ns, run_bench
from gcech.io import timing_rows, write_timing_table

DEFAULT = ["even-40", "random-40", "even-90", "random-90", "even-150", "random-150"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--presets", nargs="+", default=DEFAULT)
    ap.add_argument("--modes", default="improved,reference")
    ap.add_argument("--runs", type=int, default=7)
    ap.add_argument("--max-k", type=int, default=None)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    modes = args.modes.split(",")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for name in args.presets:
        ds = datagen.generate(datagen.preset(name))
        res = run_bench(ds, modes, args.runs, max_dimension=args.max_k)
        rows = [r for m in modes for r in timing_rows(m, res[m])]
        write_timing_table(out / f"{name}.csv", rows)
        top = max(res[modes[0]][0].levels)
        print(f"{name}: n={len(ds)}, top k={top}")
        for m in modes:
            per = " ".join(f"{mean_level_ns(res[m], k) / 1e6:.1f}" for k in range(2, top + 1))
            print(f"  {m:>14}: total {mean_total_ns(res[m]) / 1e6:9.1f} ms | per-level ms k>=2: {per}")
        if "improved" in res and "reference" in res:
            print(f"  speedup {mean_total_ns(res['reference']) / mean_total_ns(res['improved']):.1f}x", flush=True)


if __name__ == "__main__":
    main()
