"""Independent verifiers and constructions used for cross-checking and timing.

* exhaustive all-pairs verification (2D and 3D), no caching
* brute-force oracles built on it
* Vietoris-Rips clique expansion
* minimum enclosing ball (move-to-front randomized incremental) and the
  equal-radius verifier based on it
"""

from __future__ import annotations

import math
import random
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np

from .complex import ComplexLevel, NeighborhoodGraph
from .geom2d import (
    DEFAULT_TOL,
    IDENTICAL,
    Tolerance,
    _circle_circle,
    disk_in_disk,
    point_in_all,
    smallest_inside_all,
)
from .geom3d import (
    Section,
    ball_in_ball,
    lift_to_3d,
    point_in_all_balls,
    section_center_radius,
    sphere_sphere_intersection,
)


def verify_reference_2d(disks: Sequence, tol: Tolerance = DEFAULT_TOL):
    """Witness of a common point of ``disks`` by exhaustive search, or None.

    Tries the smallest disk's center if it sits inside all others, then every
    boundary intersection point of every pair.
    """
    m = smallest_inside_all(disks, disk_in_disk, tol)
    if m is not None:
        return tuple(m.center)
    eps = tol.eps
    for a, b in combinations(disks, 2):
        pts = _circle_circle(a.center, a.radius, b.center, b.radius, eps)
        if pts is IDENTICAL:
            continue
        for p in pts:
            if point_in_all(p, disks, tol):
                return p
    return None


def oracle_2d(disks: Sequence, tol: Tolerance = DEFAULT_TOL) -> bool:
    return verify_reference_2d(disks, tol) is not None


def verify_reference_3d(balls: Sequence, tol: Tolerance = DEFAULT_TOL):
    """Witness of a common point of ``balls``, or None.

    Tries ball containment, then for every pair of spheres cuts all other balls
    with the plane of their crease circle and searches that planar problem
    exhaustively.
    """
    m = smallest_inside_all(balls, ball_in_ball, tol)
    if m is not None:
        return tuple(m.center)
    for i, j in combinations(range(len(balls)), 2):
        c = sphere_sphere_intersection(balls[i], balls[j], tol)
        if c is None or c is IDENTICAL:
            continue
        if c.radius == 0.0:
            if point_in_all_balls(c.center, balls, tol):
                return c.center
            continue
        f = c.plane
        cuts = [Section(-1, (0.0, 0.0), c.radius)]
        for t, b in enumerate(balls):
            if t == i or t == j:
                continue
            cut = section_center_radius(b.center, b.radius, f, tol.eps)
            if cut is None:
                break
            cuts.append(Section(b.id, cut[0], cut[1]))
        else:
            p = verify_reference_2d(cuts, tol)
            if p is not None:
                return lift_to_3d(p, f)
    return None


def oracle_3d(balls: Sequence, tol: Tolerance = DEFAULT_TOL) -> bool:
    return verify_reference_3d(balls, tol) is not None


def reference_verifier(ambient_dim: int):
    return verify_reference_2d if ambient_dim == 2 else verify_reference_3d


def oracle_for(ambient_dim: int):
    return oracle_2d if ambient_dim == 2 else oracle_3d


def reference_candidates(g: NeighborhoodGraph, k: int):
    """k-cliques found by trying every k-combination of a vertex's higher neighbors.

    This is the non-incremental enumeration the cached method improves on; a
    pairwise adjacency check discards non-cliques before verification.
    """
    nbrs = g.nbrs
    for v in range(len(nbrs)):
        higher = g.higher_neighbors(v)
        for combo in combinations(higher, k):
            if all(b in nbrs[a] for a, b in combinations(combo, 2)):
                yield (v,) + combo


def vr_complex(n: int, g: NeighborhoodGraph, max_k: Optional[int] = None) -> List[set]:
    """Vietoris-Rips levels (cliques) by max-index common-neighbor extension."""
    levels = [{(v,) for v in range(n)}]
    if max_k == 0:
        return levels
    levels.append(set(g.edges()))
    k = 1
    nbrs = g.nbrs
    while levels[-1] and (max_k is None or k < max_k):
        nxt = set()
        for s in levels[-1]:
            top = s[-1]
            cand = [w for w in nbrs[top] if w > top]
            for v in s[:-1]:
                if not cand:
                    break
                nv = nbrs[v]
                cand = [w for w in cand if w in nv]
            for w in cand:
                nxt.add(s + (w,))
        k += 1
        if not nxt:
            break
        levels.append(nxt)
    return levels


def oracle_complex(dataset: Sequence, g: NeighborhoodGraph, tol: Tolerance = DEFAULT_TOL) -> List[set]:
    """Every VR simplex tested independently with the exhaustive oracle.

    Levels 0 and 1 are taken from the graph; from level 2 on, each clique is
    checked in isolation (no face pruning, no caching).
    """
    ambient = len(dataset[0].center)
    oracle = oracle_for(ambient)
    vr = vr_complex(len(dataset), g)
    out = [set(vr[0]), set(vr[1]) if len(vr) > 1 else set()]
    for lvl in vr[2:]:
        keep = {s for s in lvl if oracle([dataset[v] for v in s], tol)}
        if not keep:
            break
        out.append(keep)
    while out and not out[-1]:
        out.pop()
    return out


# --- minimum enclosing ball -------------------------------------------------


def _support_ball(support: List[tuple]):
    """Smallest ball with every support point on its boundary (circumball in the affine hull)."""
    if not support:
        return None, -1.0
    p0 = np.asarray(support[0], dtype=float)
    if len(support) == 1:
        return p0, 0.0
    V = np.asarray(support[1:], dtype=float) - p0
    A = 2.0 * V @ V.T
    b = np.einsum("ij,ij->i", V, V)
    lam = np.linalg.lstsq(A, b, rcond=None)[0]
    c = p0 + lam @ V
    r = max(float(np.linalg.norm(np.asarray(q) - c)) for q in support)
    return c, r


def _mtf(pts: list, n: int, support: list, dim: int):
    c, r = _support_ball(support)
    if len(support) == dim + 1:
        return c, r
    i = 0
    while i < n:
        p = pts[i]
        if c is None or math.dist(p, c) > r + 1e-12 * (1.0 + r):
            c, r = _mtf(pts, i, support + [p], dim)
            pts.insert(0, pts.pop(i))
        i += 1
    return c, r


def minimum_enclosing_ball(points: Sequence[Sequence[float]], seed: int = 0):
    """Smallest enclosing ball of ``points`` as ``(center, radius)``.

    Randomized incremental construction with move-to-front; ``seed`` fixes the
    initial shuffle.
    """
    pts = [tuple(float(x) for x in p) for p in points]
    if not pts:
        raise ValueError("minimum enclosing ball of an empty point set")
    dim = len(pts[0])
    random.Random(seed).shuffle(pts)
    c, r = _mtf(pts, len(pts), [], dim)
    return tuple(float(x) for x in c), float(r)


def verify_meb(balls: Sequence, radius: float, tol: Tolerance = DEFAULT_TOL):
    """Equal-radius check: the centers' enclosing ball must fit inside radius + eps.

    Returns the enclosing-ball center as a witness, or None.
    """
    for b in balls:
        if abs(b.radius - radius) > tol.eps:
            raise ValueError("verify_meb requires every radius to equal the common radius")
    c, r = minimum_enclosing_ball([b.center for b in balls])
    return c if r <= radius + tol.eps else None


def equal_radius(dataset: Sequence, tol: Tolerance = DEFAULT_TOL) -> Optional[float]:
    """The shared radius if all elements have the same radius within eps, else None."""
    r0 = dataset[0].radius
    if all(abs(e.radius - r0) <= tol.eps for e in dataset):
        return r0
    return None


def level_from_sets(k: int, members) -> ComplexLevel:
    lvl = ComplexLevel(k, track_witnesses=False)
    lvl.members = set(members)
    return lvl
