"""Regenerate the dataset files under tests/data.

    python scripts/make_fixtures.py [--out tests/data]

Acceptance suites read these files rather than regenerating, so the datasets
stay fixed even if the generator changes.
"""

import argparse
import math
import random
from pathlib import Path

from gcech import Disk, datagen
from gcech.io import DiskSet, write_disk_set

# random small instances: n and base radius vary per dataset
SMALL_2D = dict(count=200, n=(5, 25), R=(2.0, 4.0), extent=10.0)
SMALL_3D = dict(count=100, n=(4, 15), R=(3.0, 6.0), extent=10.0)


def small_sets(out: Path, dim: int, spec: dict):
    d = out / f"small{dim}d"
    d.mkdir(parents=True, exist_ok=True)
    for i in range(spec["count"]):
        rng = random.Random(1000 * dim + i)
        cfg = datagen.GenConfig(
            extent=(spec["extent"],) * dim,
            n=rng.randint(*spec["n"]),
            R=round(rng.uniform(*spec["R"]), 3),
            seed=i,
        )
        write_disk_set(d / f"ds_{i:03d}.txt", DiskSet(dim, datagen.generate(cfg), cfg.to_meta()))


def triangle(side: float):
    h = side * math.sqrt(3.0) / 2.0
    return [Disk(0, (0.0, 0.0), 1.0), Disk(1, (side, 0.0), 1.0), Disk(2, (side / 2.0, h), 1.0)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "tests" / "data"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_disk_set(out / "triangle_side1.txt", DiskSet(2, triangle(1.0), {"fixture": "equilateral side 1, unit disks"}))
    write_disk_set(out / "triangle_side1_9.txt", DiskSet(2, triangle(1.9), {"fixture": "equilateral side 1.9, unit disks"}))
    for name in ("random-90", "even-40", "equal-150", "equal-150-3d"):
        cfg = datagen.preset(name)
        meta = {**cfg.to_meta(), "preset": name}
        write_disk_set(out / f"{name}.txt", DiskSet(cfg.dim, datagen.generate(cfg), meta))
    small_sets(out, 2, SMALL_2D)
    small_sets(out, 3, SMALL_3D)


if __name__ == "__main__":
    main()
