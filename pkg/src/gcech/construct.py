"""Level-by-level construction of the generalized Čech complex.

Level k is built from level k-1: each (k-1)-simplex is extended by common
neighbors larger than its top vertex, and each candidate is verified using the
witness point cached for the simplex it extends.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Literal, Optional, Sequence, Tuple

from . import baselines
from .complex import BenchStats, CechComplex, ComplexLevel, NeighborhoodGraph, Simplex
from .geom2d import (
    DEFAULT_TOL,
    IDENTICAL,
    Disk,
    Tolerance,
    _circle_circle,
    _pair_witness,
    disk_in_disk,
    point_in_all,
    smallest_inside_all,
)
from .geom3d import (
    Ball,
    Section,
    ball_in_ball,
    lift_to_3d,
    point_in_all_balls,
    section_center_radius,
    sphere_sphere_intersection,
)
from .helly import verify_helly_faces, verify_helly_subsets

log = logging.getLogger(__name__)

Method = Literal["improved", "reference", "meb"]
Helly = Literal["none", "subsets", "faces"]


@dataclass
class BuildOptions:
    max_dimension: Optional[int] = None  # None: until a level comes out empty
    tol: Tolerance = field(default_factory=Tolerance)
    method: Method = "improved"
    helly: Helly = "none"
    workers: int = 1
    deterministic: bool = False
    keep_witnesses: bool = False
    graph: Literal["all_pairs", "grid"] = "all_pairs"

    def __post_init__(self):
        if self.max_dimension is not None and self.max_dimension < 1:
            raise ValueError("max_dimension must be >= 1")
        if self.method not in ("improved", "reference", "meb"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.helly not in ("none", "subsets", "faces"):
            raise ValueError(f"unknown helly variant {self.helly!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def validate_dataset(elements: Sequence) -> List:
    """Elements sorted by id; ids must be exactly 0..n-1, one ambient dimension."""
    if not elements:
        raise ValueError("dataset is empty")
    out = sorted(elements, key=lambda e: e.id)
    for i, e in enumerate(out):
        if e.id != i:
            raise ValueError(f"ids must be unique and contiguous from 0; got id {e.id} at position {i}")
        if not e.radius > 0:
            raise ValueError(f"element {e.id} has non-positive radius {e.radius!r}")
    dims = {len(e.center) for e in out}
    if len(dims) != 1 or dims.pop() not in (2, 3):
        raise ValueError("all elements must be either disks (2D) or balls (3D)")
    return out


def ambient_dimension(dataset: Sequence) -> int:
    return len(dataset[0].center)


# --- neighborhood graph -----------------------------------------------------


def build_neighborhood_graph(elements: Sequence, tol: Tolerance = DEFAULT_TOL, method: str = "all_pairs") -> NeighborhoodGraph:
    """Edge (i, j) iff the closed elements meet: |p_i - p_j| <= r_i + r_j + eps."""
    n = len(elements)
    g = NeighborhoodGraph(n)
    eps = tol.eps
    if method == "grid" and n > 1:
        pairs = _grid_pairs(elements, eps)
    else:
        pairs = ((i, j) for i in range(n) for j in range(i + 1, n))
    for i, j in pairs:
        a, b = elements[i], elements[j]
        if math.dist(a.center, b.center) <= a.radius + b.radius + eps:
            g.add_edge(i, j)
    return g


def _grid_pairs(elements, eps):
    """Candidate pairs from a uniform grid with cell size 2*max_radius + eps."""
    cell = 2.0 * max(e.radius for e in elements) + eps
    buckets = {}
    for e in elements:
        key = tuple(int(math.floor(c / cell)) for c in e.center)
        buckets.setdefault(key, []).append(e.id)
    dim = len(elements[0].center)
    offsets = [()]
    for _ in range(dim):
        offsets = [o + (d,) for o in offsets for d in (-1, 0, 1)]
    for key, ids in buckets.items():
        for off in offsets:
            other = buckets.get(tuple(k + o for k, o in zip(key, off)))
            if not other:
                continue
            for i in ids:
                for j in other:
                    if i < j:
                        yield i, j


# --- candidate enumeration --------------------------------------------------


def generate_candidates(prev: ComplexLevel, g: NeighborhoodGraph, deterministic: bool = False) -> Iterator[Tuple[Simplex, int]]:
    """Pairs (s, d) with d a common neighbor of s and d > max(s).

    Each k-clique over a present (k-1)-simplex is produced exactly once, as its
    omit-max face plus its max vertex.
    """
    nbrs = g.nbrs
    simplices = prev.sorted() if deterministic else prev.members
    for s in simplices:
        top = s[-1]
        cand = [w for w in nbrs[top] if w > top]
        for v in s[:-1]:
            if not cand:
                break
            nv = nbrs[v]
            cand = [w for w in cand if w in nv]
        if deterministic:
            cand.sort()
        for d in cand:
            yield s, d


# --- verification -----------------------------------------------------------


def verify2d(s_prev: Simplex, d: Disk, cached_p, all_disks: Sequence[Disk], tol: Tolerance = DEFAULT_TOL):
    """Witness for s_prev + d, or None.

    1. smallest disk of the candidate inside all the others -> its center
    2. cached witness of s_prev inside d -> unchanged
    3. a boundary intersection of d with some disk of s_prev inside all disks
    """
    members = [all_disks[i] for i in s_prev]
    members.append(d)
    m = smallest_inside_all(members, disk_in_disk, tol)
    if m is not None:
        return m.center
    eps = tol.eps
    if cached_p is not None:
        c = d.center
        if math.hypot(cached_p[0] - c[0], cached_p[1] - c[1]) <= d.radius + eps:
            return cached_p
    dc, dr = d.center, d.radius
    for di in members[:-1]:
        pts = _circle_circle(di.center, di.radius, dc, dr, eps)
        if pts is IDENTICAL:
            continue
        for p in pts:
            if point_in_all(p, members, tol):
                return p
    return None


def verify3d(s_prev: Simplex, b: Ball, cached_p, all_balls: Sequence[Ball], tol: Tolerance = DEFAULT_TOL):
    """Witness for s_prev + b, or None.

    Same first two branches as :func:`verify2d`. Otherwise, for each ball b_i of
    s_prev, the crease circle of b_i and b is intersected with the plane
    sections of the remaining balls, and the planar problem is solved on that
    circle.
    """
    members = [all_balls[i] for i in s_prev]
    members.append(b)
    m = smallest_inside_all(members, ball_in_ball, tol)
    if m is not None:
        return m.center
    eps = tol.eps
    if cached_p is not None and math.dist(cached_p, b.center) <= b.radius + eps:
        return cached_p
    others = members[:-1]
    for i, bi in enumerate(others):
        c = sphere_sphere_intersection(bi, b, tol)
        if c is None or c is IDENTICAL:
            continue
        if c.radius == 0.0:
            if point_in_all_balls(c.center, members, tol):
                return c.center
            continue
        f = c.plane
        crease = Section(b.id, (0.0, 0.0), c.radius)
        cuts = [crease]
        for j, bj in enumerate(others):
            if j == i:
                continue
            cut = section_center_radius(bj.center, bj.radius, f, eps)
            if cut is None:
                break
            cuts.append(Section(bj.id, cut[0], cut[1]))
        else:
            sm = smallest_inside_all(cuts, disk_in_disk, tol)
            if sm is not None:
                return lift_to_3d(sm.center, f)
            for cj in cuts[1:]:
                pts = _circle_circle(crease.center, crease.radius, cj.center, cj.radius, eps)
                if pts is IDENTICAL:
                    continue
                for p in pts:
                    if point_in_all(p, cuts, tol):
                        return lift_to_3d(p, f)
    return None


# --- level loop -------------------------------------------------------------


def _verifier(dataset, opts: BuildOptions):
    ambient = ambient_dimension(dataset)
    tol = opts.tol
    if opts.method == "meb":
        r = baselines.equal_radius(dataset, tol)
        if r is None:
            raise ValueError("meb verification requires all radii to be equal")

        def check(s, v, cached):
            return baselines.verify_meb([dataset[i] for i in s + (v,)], r, tol)

        return check
    geometric = verify2d if ambient == 2 else verify3d

    def check(s, v, cached):
        return geometric(s, dataset[v], cached, dataset, tol)

    return check


def _run_chunk(cands, check, witnesses, helly_test):
    out = []
    for s, v in cands:
        if helly_test is not None:
            if helly_test(s + (v,)):
                out.append((s + (v,), None))
            continue
        w = check(s, v, witnesses.get(s) if witnesses is not None else None)
        if w is not None:
            out.append((s + (v,), w))
    return out


def k_simplices(
    prev: ComplexLevel,
    g: NeighborhoodGraph,
    dataset: Sequence,
    opts: BuildOptions,
    stats: Optional[BenchStats] = None,
    level_d: Optional[ComplexLevel] = None,
) -> ComplexLevel:
    """All k-simplices (k = prev.dimension + 1) from the complete level k-1.

    Above the ambient dimension a Helly variant, if selected, replaces the
    geometric check; ``level_d`` must then be the complete level d when the
    subsets variant is used.
    """
    k = prev.dimension + 1
    ambient = ambient_dimension(dataset)
    t0 = time.perf_counter_ns()
    cands = list(generate_candidates(prev, g, opts.deterministic))
    t1 = time.perf_counter_ns()

    helly_test = None
    if k > ambient and opts.helly != "none" and opts.method == "improved":
        if opts.helly == "faces":
            helly_test = lambda s: verify_helly_faces(s, prev, ambient, skip_last=True)
        else:
            if level_d is None:
                raise ValueError("helly subsets needs the complete level of the ambient dimension")
            helly_test = lambda s: verify_helly_subsets(s, level_d, ambient)
    check = None if helly_test is not None else _verifier(dataset, opts)
    # witnesses of prev are read-only during this level
    wmap = prev.witnesses

    if opts.workers > 1 and len(cands) > 1:
        size = -(-len(cands) // opts.workers)
        chunks = [cands[i:i + size] for i in range(0, len(cands), size)]
        with ThreadPoolExecutor(max_workers=opts.workers) as pool:
            parts = list(pool.map(lambda c: _run_chunk(c, check, wmap, helly_test), chunks))
        found = [item for part in parts for item in part]
    else:
        found = _run_chunk(cands, check, wmap, helly_test)
    t2 = time.perf_counter_ns()

    track = helly_test is None
    level = ComplexLevel(k, track_witnesses=track)
    for s, w in found:
        level.insert(s, w)
    t3 = time.perf_counter_ns()

    if stats is not None:
        st = stats.level(k)
        st.candidates = len(cands)
        st.cech_count = len(level)
        st.generate_ns = t1 - t0
        st.verify_ns = t2 - t1
        st.total_ns = t3 - t0
    return level


def _reference_level(k: int, g: NeighborhoodGraph, dataset: Sequence, opts: BuildOptions, stats: Optional[BenchStats]) -> ComplexLevel:
    """Level k by the exhaustive scheme: every k-clique from neighbor combinations,
    each verified by all-pairs search with no cached witness."""
    verify = baselines.reference_verifier(ambient_dimension(dataset))
    tol = opts.tol
    t0 = time.perf_counter_ns()
    level = ComplexLevel(k)
    n_cand = 0
    for s in baselines.reference_candidates(g, k):
        n_cand += 1
        w = verify([dataset[i] for i in s], tol)
        if w is not None:
            level.insert(s, w)
    t1 = time.perf_counter_ns()
    if stats is not None:
        st = stats.level(k)
        st.candidates = n_cand
        st.cech_count = len(level)
        st.verify_ns = t1 - t0
        st.total_ns = t1 - t0
    return level


def build_complex(dataset: Sequence, opts: Optional[BuildOptions] = None) -> CechComplex:
    """Čech complex of a list of :class:`Disk` or :class:`Ball` with ids 0..n-1."""
    opts = opts or BuildOptions()
    dataset = validate_dataset(dataset)
    ambient = ambient_dimension(dataset)
    if opts.method == "meb" and baselines.equal_radius(dataset, opts.tol) is None:
        raise ValueError("meb verification requires all radii to be equal")
    tol = opts.tol
    stats = BenchStats()
    start = time.perf_counter_ns()

    lvl0 = ComplexLevel(0)
    for e in dataset:
        lvl0.insert((e.id,), tuple(e.center))
    st0 = stats.level(0)
    st0.candidates = st0.cech_count = len(lvl0)

    t0 = time.perf_counter_ns()
    g = build_neighborhood_graph(dataset, tol, opts.graph)
    lvl1 = ComplexLevel(1)
    for i, j in g.edges():
        a, b = dataset[i], dataset[j]
        lvl1.insert((i, j), _pair_witness(a.center, a.radius, b.center, b.radius, tol.eps))
    st1 = stats.level(1)
    st1.candidates = len(lvl1)
    st1.cech_count = len(lvl1)
    st1.total_ns = st1.verify_ns = time.perf_counter_ns() - t0

    levels = [lvl0]
    if len(lvl1) and (opts.max_dimension is None or opts.max_dimension >= 1):
        levels.append(lvl1)
    k = 2
    while len(levels) == k and len(levels[-1]) and (opts.max_dimension is None or k <= opts.max_dimension):
        if opts.method == "reference":
            nxt = _reference_level(k, g, dataset, opts, stats)
        else:
            level_d = levels[ambient] if len(levels) > ambient else None
            nxt = k_simplices(levels[-1], g, dataset, opts, stats, level_d)
        log.debug("k=%d: %d simplices", k, len(nxt))
        if not opts.keep_witnesses and k >= 2:
            # only levels k-1 and k keep their witness maps
            levels[k - 2].drop_witnesses()
        if not len(nxt):
            break
        levels.append(nxt)
        k += 1
    stats.total_ns = time.perf_counter_ns() - start
    return CechComplex(ambient, levels, stats, tol.eps)


def build_graph_and_complex(dataset: Sequence, opts: Optional[BuildOptions] = None):
    """Convenience for callers that also need the graph (e.g. VR comparisons)."""
    opts = opts or BuildOptions()
    dataset = validate_dataset(dataset)
    cx = build_complex(dataset, opts)
    return build_neighborhood_graph(dataset, opts.tol, opts.graph), cx
