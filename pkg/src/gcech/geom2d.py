"""Floating-point predicates and constructions on closed disks in the plane.

Every containment decision goes through one absolute tolerance ``eps``.
Points are plain ``(x, y)`` tuples.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

Point2 = Tuple[float, float]

DEFAULT_EPS = 1e-9


class Degenerate(enum.Enum):
    """Marker returned when two boundaries coincide (infinitely many common points)."""

    IDENTICAL_BOUNDARIES = "identical boundaries"


IDENTICAL = Degenerate.IDENTICAL_BOUNDARIES


@dataclass(frozen=True)
class Tolerance:
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not (self.eps >= 0 and math.isfinite(self.eps)):
            raise ValueError(f"tolerance must be a finite non-negative number, got {self.eps!r}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, slots=True)
class Disk:
    id: int
    center: Point2
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"disk {self.id}: radius must be positive, got {self.radius!r}")
        if not all(math.isfinite(c) for c in self.center):
            raise ValueError(f"disk {self.id}: center must be finite, got {self.center!r}")

    @property
    def x(self) -> float:
        return self.center[0]

    @property
    def y(self) -> float:
        return self.center[1]


def circle_circle_intersections(a: Disk, b: Disk, tol: Tolerance = DEFAULT_TOL):
    """Points where the boundaries of ``a`` and ``b`` meet.

    Returns a list of 0, 1 (tangency within ``eps``) or 2 points, or
    ``IDENTICAL`` when both circles coincide within ``eps``.
    """
    return _circle_circle(a.center, a.radius, b.center, b.radius, tol.eps)


def _circle_circle(ca: Point2, ra: float, cb: Point2, rb: float, eps: float):
    dx = cb[0] - ca[0]
    dy = cb[1] - ca[1]
    d = math.hypot(dx, dy)
    if d <= eps:
        if abs(ra - rb) <= eps:
            return IDENTICAL
        return []
    ux = dx / d
    uy = dy / d
    outer = ra + rb
    inner = abs(ra - rb)
    if abs(d - outer) <= eps or abs(d - inner) <= eps:
        # tangency: single point on the center line, signed offset from ca
        a = (d * d + ra * ra - rb * rb) / (2.0 * d)
        return [(ca[0] + a * ux, ca[1] + a * uy)]
    if d > outer or d < inner:
        return []
    a = (d * d + ra * ra - rb * rb) / (2.0 * d)
    # Heron-style product keeps the half-chord accurate near tangency
    h2 = (outer - d) * (d - ra + rb) * (d + ra - rb) * (outer + d)
    h = math.sqrt(max(0.0, h2)) / (2.0 * d)
    mx = ca[0] + a * ux
    my = ca[1] + a * uy
    return [(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)]


def point_in_disk(p: Point2, d: Disk, tol: Tolerance = DEFAULT_TOL) -> bool:
    return math.hypot(p[0] - d.center[0], p[1] - d.center[1]) <= d.radius + tol.eps


def disk_in_disk(inner: Disk, outer: Disk, tol: Tolerance = DEFAULT_TOL) -> bool:
    c, o = inner.center, outer.center
    return math.hypot(c[0] - o[0], c[1] - o[1]) + inner.radius <= outer.radius + tol.eps


def point_in_all(p: Point2, disks: Sequence[Disk], tol: Tolerance = DEFAULT_TOL) -> bool:
    px, py = p
    bound = tol.eps
    for d in disks:
        c = d.center
        if math.hypot(px - c[0], py - c[1]) > d.radius + bound:
            return False
    return True


def smallest(disks: Sequence[Disk]) -> Disk:
    """Minimum-radius element; ties go to the lowest id."""
    return min(disks, key=lambda d: (d.radius, d.id))


def smallest_inside_all(disks: Sequence, contains, tol: Tolerance = DEFAULT_TOL):
    """The minimum-radius element if it lies inside every other one, else None.

    ``contains(inner, outer, tol)`` is the containment predicate; this is
    shared between disks and balls.
    """
    m = smallest(disks)
    for other in disks:
        if other is not m and not contains(m, other, tol):
            return None
    return m


def pair_witness(a: Disk, b: Disk, tol: Tolerance = DEFAULT_TOL) -> Point2 | None:
    """A point common to two closed disks, or None if they are disjoint."""
    return _pair_witness(a.center, a.radius, b.center, b.radius, tol.eps)


def _pair_witness(ca, ra, cb, rb, eps):
    # dimension-agnostic: ca/cb may be 2- or 3-tuples
    diff = [q - p for p, q in zip(ca, cb)]
    d = math.sqrt(sum(v * v for v in diff))
    if d + min(ra, rb) <= max(ra, rb) + eps:
        return tuple(ca) if ra <= rb else tuple(cb)
    if d > ra + rb + eps:
        return None
    a = (d * d + ra * ra - rb * rb) / (2.0 * d)
    # outside-by-<=eps tangency leaves an empty interval; take its midpoint
    lo, hi = d - rb, ra
    if a < lo or a > hi:
        a = min(max(a, min(lo, hi)), max(lo, hi)) if lo <= hi else 0.5 * (lo + hi)
    return tuple(p + a * v / d for p, v in zip(ca, diff))
