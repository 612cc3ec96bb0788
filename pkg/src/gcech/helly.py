"""Combinatorial verification above the ambient dimension.

In the plane (space) a family of convex sets meets as soon as every 3 (4) of
its members meet, so candidates of dimension k > d can be decided from the
levels already built, without geometry.
"""

from __future__ import annotations

from itertools import combinations

from .complex import ComplexLevel, Simplex


def verify_helly_subsets(s: Simplex, level_d: ComplexLevel, ambient_d: int) -> bool:
    """Every (d+1)-vertex subset of ``s`` must be a d-simplex; C(k+1, d+1) lookups."""
    members = level_d.members
    return all(sub in members for sub in combinations(s, ambient_d + 1))


def verify_helly_faces(s: Simplex, level_prev: ComplexLevel, ambient_d: int, skip_last: bool = False) -> bool:
    """Every codimension-1 face of ``s`` must be in the previous level.

    With ``skip_last`` the face omitting the largest vertex is assumed present,
    which holds for candidates produced by max-index extension.
    """
    members = level_prev.members
    n = len(s) - 1 if skip_last else len(s)
    for i in range(n):
        if s[:i] + s[i + 1:] not in members:
            return False
    return True
