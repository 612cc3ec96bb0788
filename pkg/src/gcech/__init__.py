"""Generalized Čech complexes of disks (2D) and balls (3D) with individual radii."""

from .complex import BenchStats, CechComplex, ComplexLevel, NeighborhoodGraph, common_neighbors, faces
from .construct import (
    BuildOptions,
    build_complex,
    build_neighborhood_graph,
    generate_candidates,
    k_simplices,
    verify2d,
    verify3d,
)
from .geom2d import IDENTICAL, Disk, Tolerance
from .geom3d import Ball

__all__ = [
    "Ball",
    "BenchStats",
    "BuildOptions",
    "CechComplex",
    "ComplexLevel",
    "Disk",
    "IDENTICAL",
    "NeighborhoodGraph",
    "Tolerance",
    "build_complex",
    "build_neighborhood_graph",
    "common_neighbors",
    "faces",
    "generate_candidates",
    "k_simplices",
    "verify2d",
    "verify3d",
]
