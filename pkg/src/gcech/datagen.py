"""Seeded dataset generators: Bridson Poisson-disk and uniform positions, α·R radii.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so a
config plus seed pins the dataset exactly.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .geom2d import Disk
from .geom3d import Ball

GENERATOR = "numpy.random.PCG64"
BRIDSON_ATTEMPTS = 30


@dataclass
class GenConfig:
    extent: Tuple[float, ...] = (100.0, 100.0)  # box [0, e_i) per axis; length sets the dimension
    distribution: str = "uniform"  # "uniform" or "poisson"
    n: Optional[int] = None  # uniform count
    min_spacing: Optional[float] = None  # poisson spacing
    R: float = 10.0
    alpha: Tuple[float, float] = (0.3, 1.0)
    seed: int = 0

    def __post_init__(self):
        self.extent = tuple(float(e) for e in self.extent)
        self.alpha = tuple(float(a) for a in self.alpha)
        lo, hi = self.alpha
        if len(self.extent) not in (2, 3) or any(e <= 0 for e in self.extent):
            raise ValueError(f"extent must be 2 or 3 positive lengths, got {self.extent}")
        if not (0 < lo <= hi):
            raise ValueError(f"alpha range must satisfy 0 < lo <= hi, got {self.alpha}")
        if not self.R > 0:
            raise ValueError("R must be positive")
        if self.distribution == "uniform":
            if self.n is None or self.n < 1:
                raise ValueError("uniform distribution needs n >= 1")
        elif self.distribution == "poisson":
            if self.min_spacing is None or not self.min_spacing > 0:
                raise ValueError("poisson distribution needs min_spacing > 0")
        else:
            raise ValueError(f"unknown distribution {self.distribution!r}")

    @property
    def dim(self) -> int:
        return len(self.extent)

    def to_meta(self) -> Dict:
        meta = asdict(self)
        meta["extent"] = list(self.extent)
        meta["alpha"] = list(self.alpha)
        meta["generator"] = GENERATOR
        return meta


def poisson_disk_positions(extent: Sequence[float], min_spacing: float, seed: int, k: int = BRIDSON_ATTEMPTS) -> List[tuple]:
    """Bridson's blue-noise sampling in a 2D or 3D box.

    Every pair of samples is at least ``min_spacing`` apart; a sample stays
    active until ``k`` annulus draws around it all fail.
    """
    if not min_spacing > 0:
        raise ValueError("min_spacing must be positive")
    rng = np.random.default_rng(seed)
    extent = [float(e) for e in extent]
    dim = len(extent)
    cell = min_spacing / math.sqrt(dim)
    shape = [max(1, int(math.ceil(e / cell))) for e in extent]
    grid: Dict[tuple, int] = {}
    samples: List[tuple] = []
    reach = int(math.ceil(math.sqrt(dim)))  # cells to scan per axis
    r2 = min_spacing * min_spacing

    def cell_of(p):
        return tuple(min(int(p[i] / cell), shape[i] - 1) for i in range(dim))

    def fits(p):
        c = cell_of(p)
        ranges = [range(max(c[i] - reach, 0), min(c[i] + reach + 1, shape[i])) for i in range(dim)]
        for key in _product(ranges):
            j = grid.get(key)
            if j is not None:
                q = samples[j]
                if sum((a - b) ** 2 for a, b in zip(p, q)) < r2:
                    return False
        return True

    def add(p):
        grid[cell_of(p)] = len(samples)
        samples.append(p)
        active.append(len(samples) - 1)

    active: List[int] = []
    add(tuple(float(rng.uniform(0, e)) for e in extent))
    while active:
        ai = int(rng.integers(len(active)))
        base = samples[active[ai]]
        placed = False
        for _ in range(k):
            p = _annulus_draw(rng, base, min_spacing, dim)
            if any(not (0 <= p[i] < extent[i]) for i in range(dim)):
                continue
            if fits(p):
                add(p)
                placed = True
                break
        if not placed:
            active[ai] = active[-1]
            active.pop()
    return samples


def _annulus_draw(rng, base, r, dim):
    # uniform in the shell r <= |x - base| < 2r
    direction = rng.normal(size=dim)
    direction /= np.linalg.norm(direction)
    u = rng.uniform()
    rho = r * (1.0 + u * (2.0 ** dim - 1.0)) ** (1.0 / dim)
    return tuple(float(b + rho * d) for b, d in zip(base, direction))


def _product(ranges):
    out = [()]
    for rg in ranges:
        out = [o + (v,) for o in out for v in rg]
    return out


def uniform_positions(extent: Sequence[float], n: int, seed: int) -> List[tuple]:
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, 1.0, size=(n, len(extent))) * np.asarray(extent, dtype=float)
    return [tuple(float(x) for x in row) for row in pts]


def sample_radii(n: int, R: float, lo: float = 0.3, hi: float = 1.0, seed: int = 0) -> List[float]:
    """Radii α·R with α ~ U(lo, hi)."""
    if not (0 < lo <= hi) or not R > 0:
        raise ValueError("need 0 < lo <= hi and R > 0")
    rng = np.random.default_rng(seed)
    if lo == hi:
        return [float(lo * R)] * n
    return [float(a * R) for a in rng.uniform(lo, hi, size=n)]


def generate(cfg: GenConfig) -> List:
    """Dataset of :class:`Disk` (2D extent) or :class:`Ball` (3D extent)."""
    # positions and radii draw from independent child streams of one seed
    pos_seed, rad_seed = np.random.SeedSequence(cfg.seed).generate_state(2, dtype=np.uint64)
    if cfg.distribution == "poisson":
        pts = poisson_disk_positions(cfg.extent, cfg.min_spacing, int(pos_seed))
    else:
        pts = uniform_positions(cfg.extent, cfg.n, int(pos_seed))
    radii = sample_radii(len(pts), cfg.R, cfg.alpha[0], cfg.alpha[1], int(rad_seed))
    cls = Disk if cfg.dim == 2 else Ball
    return [cls(i, p, r) for i, (p, r) in enumerate(zip(pts, radii))]


# Desk-scale analogs of the experiment datasets; densities are our own choice.
PRESETS: Dict[str, GenConfig] = {
    "even-40": GenConfig(extent=(100.0, 100.0), distribution="poisson", min_spacing=12.5, R=20.0),
    "random-40": GenConfig(extent=(100.0, 100.0), n=40, R=15.0),
    "even-90": GenConfig(extent=(100.0, 100.0), distribution="poisson", min_spacing=8.3, R=14.0),
    "random-90": GenConfig(extent=(100.0, 100.0), n=90, R=16.0, seed=1),
    "even-150": GenConfig(extent=(100.0, 100.0), distribution="poisson", min_spacing=6.4, R=11.0),
    "random-150": GenConfig(extent=(100.0, 100.0), n=150, R=10.0),
    "even-10k": GenConfig(extent=(820.0, 820.0), distribution="poisson", min_spacing=6.4, R=11.0),
    "equal-150": GenConfig(extent=(100.0, 100.0), n=150, R=8.0, alpha=(1.0, 1.0)),
    "equal-150-3d": GenConfig(extent=(100.0, 100.0, 100.0), n=150, R=17.0, alpha=(1.0, 1.0)),
    "random-40-3d": GenConfig(extent=(100.0, 100.0, 100.0), n=40, R=25.0),
}


def preset(name: str, seed: Optional[int] = None) -> GenConfig:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    cfg = PRESETS[name]
    if seed is None:
        return GenConfig(**{**asdict(cfg)})
    return GenConfig(**{**asdict(cfg), "seed": seed})
