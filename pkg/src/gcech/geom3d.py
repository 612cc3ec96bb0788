"""Balls in 3-space: crease circles, plane sections and containment.

A plane carries a deterministic orthonormal frame so that sections can be
handled with the planar kernel in :mod:`gcech.geom2d`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .geom2d import DEFAULT_TOL, IDENTICAL, Disk, Point2, Tolerance

Point3 = Tuple[float, float, float]


@dataclass(frozen=True, slots=True)
class Ball:
    id: int
    center: Point3
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"ball {self.id}: radius must be positive, got {self.radius!r}")
        if len(self.center) != 3 or not all(math.isfinite(c) for c in self.center):
            raise ValueError(f"ball {self.id}: center must be 3 finite numbers, got {self.center!r}")


@dataclass(frozen=True)
class Plane:
    origin: Point3
    normal: Point3
    basis_u: Point3
    basis_v: Point3


@dataclass(frozen=True)
class Circle3:
    plane: Plane
    radius: float

    @property
    def center(self) -> Point3:
        return self.plane.origin

    def point_at(self, theta: float) -> Point3:
        return lift_to_3d((self.radius * math.cos(theta), self.radius * math.sin(theta)), self.plane)


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def _dot(p, q):
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def _cross(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _unit(p):
    n = math.sqrt(_dot(p, p))
    return (p[0] / n, p[1] / n, p[2] / n)


def make_plane(origin: Point3, normal: Point3) -> Plane:
    """Plane through ``origin`` with a frame built from the least-aligned axis."""
    n = _unit(normal)
    k = min(range(3), key=lambda i: abs(n[i]))
    axis = [0.0, 0.0, 0.0]
    axis[k] = 1.0
    u = _unit(_cross(n, axis))
    v = _cross(n, u)
    return Plane(tuple(origin), n, u, v)


def sphere_sphere_intersection(a: Ball, b: Ball, tol: Tolerance = DEFAULT_TOL):
    """Crease circle of two sphere boundaries.

    Returns a :class:`Circle3` (radius 0 at tangency), None when the spheres
    do not meet, or ``IDENTICAL`` for coincident spheres.
    """
    ca, ra, cb, rb = a.center, a.radius, b.center, b.radius
    eps = tol.eps
    diff = _sub(cb, ca)
    d = math.sqrt(_dot(diff, diff))
    if d <= eps:
        return IDENTICAL if abs(ra - rb) <= eps else None
    u = (diff[0] / d, diff[1] / d, diff[2] / d)
    outer = ra + rb
    a_off = (d * d + ra * ra - rb * rb) / (2.0 * d)
    if abs(d - outer) <= eps or abs(d - abs(ra - rb)) <= eps:
        rho = 0.0
    elif d > outer or d < abs(ra - rb):
        return None
    else:
        h2 = (outer - d) * (d - ra + rb) * (d + ra - rb) * (outer + d)
        rho = math.sqrt(max(0.0, h2)) / (2.0 * d)
    center = (ca[0] + a_off * u[0], ca[1] + a_off * u[1], ca[2] + a_off * u[2])
    return Circle3(make_plane(center, u), rho)


def section_center_radius(center: Point3, radius: float, f: Plane, eps: float):
    """(2D center, radius) of a ball cut by ``f``, or None when the plane misses it."""
    rel = _sub(center, f.origin)
    h = _dot(rel, f.normal)
    if abs(h) > radius + eps:
        return None
    return (_dot(rel, f.basis_u), _dot(rel, f.basis_v)), math.sqrt(max(0.0, radius * radius - h * h))


def ball_plane_intersection(b: Ball, f: Plane, tol: Tolerance = DEFAULT_TOL) -> Disk | None:
    """Section of ``b`` by ``f`` in plane coordinates; keeps the ball's id.

    A tangent plane gives a zero-radius section, which is not a valid
    :class:`Disk`; it is returned as a :class:`Section` with the same fields.
    """
    cut = section_center_radius(b.center, b.radius, f, tol.eps)
    if cut is None:
        return None
    c2, rho = cut
    if rho > 0:
        return Disk(b.id, c2, rho)
    return Section(b.id, c2, rho)


@dataclass(frozen=True, slots=True)
class Section:
    """Plane section of a ball; unlike :class:`Disk` the radius may be 0."""

    id: int
    center: Point2
    radius: float


def point_in_ball(p: Point3, b: Ball, tol: Tolerance = DEFAULT_TOL) -> bool:
    c = b.center
    return math.dist(p, c) <= b.radius + tol.eps


def ball_in_ball(inner: Ball, outer: Ball, tol: Tolerance = DEFAULT_TOL) -> bool:
    return math.dist(inner.center, outer.center) + inner.radius <= outer.radius + tol.eps


def point_in_all_balls(p: Point3, balls: Sequence[Ball], tol: Tolerance = DEFAULT_TOL) -> bool:
    bound = tol.eps
    for b in balls:
        if math.dist(p, b.center) > b.radius + bound:
            return False
    return True


def lift_to_3d(p2: Point2, f: Plane) -> Point3:
    o, u, v = f.origin, f.basis_u, f.basis_v
    x, y = p2
    return (o[0] + x * u[0] + y * v[0], o[1] + x * u[1] + y * v[1], o[2] + x * u[2] + y * v[2])


def project_to_plane(p: Point3, f: Plane) -> Point2:
    rel = _sub(p, f.origin)
    return (_dot(rel, f.basis_u), _dot(rel, f.basis_v))
