"""Per-level time of the geometric verifier against both Helly variants.

    python scripts/helly_profile.py --preset random-90 --runs 5
"""

import argparse

from gcech import datagen
from gcech.bench import mean_level_ns, run_bench

MODES = ["improved", "helly_faces", "helly_subsets"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--preset", default="random-90")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--runs", type=int, default=5)
    args = ap.parse_args()
    ds = datagen.generate(datagen.preset(args.preset, args.seed))
    res = run_bench(ds, MODES, args.runs, with_vr=False)
    top = max(res["improved"][0].levels)
    print(f"{'k':>3} " + " ".join(f"{m:>14}" for m in MODES))
    for k in range(2, top + 1):
        print(f"{k:>3} " + " ".join(f"{mean_level_ns(res[m], k) / 1e6:14.2f}" for m in MODES))
    for m in MODES[1:]:
        a = sum(mean_level_ns(res["improved"], k) for k in range(4, top + 1))
        b = sum(mean_level_ns(res[m], k) for k in range(4, top + 1))
        print(f"{m}: levels >= 4 take {b / a:.2f} of the geometric time")


if __name__ == "__main__":
    main()
