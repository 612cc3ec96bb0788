"""Timing harness: repeated builds per mode with per-dimension counters.

Measured region: graph construction plus every level; file I/O and parsing
are outside it. Runs are sequential.
"""

from __future__ import annotations

import gc
from typing import Dict, List, Optional, Sequence

from .baselines import equal_radius, vr_complex
from .complex import BenchStats
from .construct import BuildOptions, build_complex, build_neighborhood_graph, validate_dataset
from .geom2d import Tolerance

MODES = {
    "improved": dict(method="improved", helly="none"),
    "reference": dict(method="reference", helly="none"),
    "meb": dict(method="meb", helly="none"),
    "helly_faces": dict(method="improved", helly="faces"),
    "helly_subsets": dict(method="improved", helly="subsets"),
}


def options_for(mode: str, tol: Tolerance, max_dimension: Optional[int] = None, **extra) -> BuildOptions:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {sorted(MODES)}")
    return BuildOptions(max_dimension=max_dimension, tol=tol, **MODES[mode], **extra)


def run_bench(
    dataset: Sequence,
    modes: Sequence[str],
    runs: int = 7,
    tol: Optional[Tolerance] = None,
    max_dimension: Optional[int] = None,
    with_vr: bool = True,
) -> Dict[str, List[BenchStats]]:
    """``runs`` timed builds per mode; VR counts (untimed) are attached to each run's stats."""
    tol = tol or Tolerance()
    dataset = validate_dataset(dataset)
    if runs < 1:
        raise ValueError("runs must be >= 1")
    if "meb" in modes and equal_radius(dataset, tol) is None:
        raise ValueError("meb mode requires all radii to be equal")
    vr_counts = None
    if with_vr:
        g = build_neighborhood_graph(dataset, tol)
        vr_counts = [len(lvl) for lvl in vr_complex(len(dataset), g, max_dimension)]
    out: Dict[str, List[BenchStats]] = {}
    for mode in modes:
        opts = options_for(mode, tol, max_dimension)
        results = []
        for _ in range(runs):
            gc.collect()
            cx = build_complex(dataset, opts)
            if vr_counts is not None:
                for k, st in cx.stats.levels.items():
                    st.vr_count = vr_counts[k] if k < len(vr_counts) else 0
                cx.stats.check_ordering()
            results.append(cx.stats)
        out[mode] = results
    return out


def mean_total_ns(runs: Sequence[BenchStats]) -> float:
    return sum(st.total_ns for st in runs) / len(runs)


def mean_level_ns(runs: Sequence[BenchStats], k: int) -> float:
    return sum(st.levels[k].total_ns if k in st.levels else 0 for st in runs) / len(runs)
