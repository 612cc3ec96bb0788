"""Simplicial complex storage: levels with witness caches, neighborhood graph, stats.

A simplex is a strictly increasing tuple of vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

Simplex = Tuple[int, ...]


def faces(s: Simplex) -> List[Simplex]:
    """Codimension-1 faces, ordered by the position of the omitted vertex."""
    if len(s) < 2:
        raise ValueError(f"faces need dimension >= 1, got {s!r}")
    return [s[:i] + s[i + 1:] for i in range(len(s))]


class ComplexLevel:
    """All k-simplices of one dimension plus an optional witness map."""

    def __init__(self, dimension: int, track_witnesses: bool = True):
        if dimension < 0:
            raise ValueError("dimension must be non-negative")
        self.dimension = dimension
        self.members: set = set()
        self.witnesses: Optional[Dict[Simplex, tuple]] = {} if track_witnesses else None

    def insert(self, s: Simplex, witness=None) -> None:
        if len(s) != self.dimension + 1:
            raise ValueError(f"simplex {s!r} does not have dimension {self.dimension}")
        if s in self.members:
            if self.witnesses is not None and self.witnesses.get(s) != witness:
                raise ValueError(f"simplex {s!r} already present with a different witness")
            return
        self.members.add(s)
        if self.witnesses is not None and witness is not None:
            self.witnesses[s] = witness

    def __contains__(self, s) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.members)

    def sorted(self) -> List[Simplex]:
        return sorted(self.members)

    def witness(self, s: Simplex):
        if self.witnesses is None:
            return None
        return self.witnesses.get(s)

    def drop_witnesses(self) -> None:
        self.witnesses = None


class NeighborhoodGraph:
    """Undirected graph on vertices 0..n-1, stored as neighbor sets."""

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        self.nbrs: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("self-loops are not allowed")
        self.nbrs[u].add(v)
        self.nbrs[v].add(u)

    def __len__(self) -> int:
        return len(self.nbrs)

    def neighbors(self, v: int) -> List[int]:
        return sorted(self.nbrs[v])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(len(self.nbrs)) for v in sorted(self.nbrs[u]) if u < v]

    def higher_neighbors(self, v: int) -> List[int]:
        return sorted(w for w in self.nbrs[v] if w > v)


def common_neighbors(g: NeighborhoodGraph, s: Sequence[int]) -> List[int]:
    """Sorted intersection of the neighbor sets of every vertex of ``s``."""
    sets = sorted((g.nbrs[v] for v in s), key=len)
    out = set(sets[0])
    for other in sets[1:]:
        out &= other
    out.difference_update(s)
    return sorted(out)


@dataclass
class LevelStats:
    k: int
    candidates: int = 0
    cech_count: int = 0
    vr_count: Optional[int] = None
    generate_ns: int = 0
    verify_ns: int = 0
    total_ns: int = 0


@dataclass
class BenchStats:
    levels: Dict[int, LevelStats] = field(default_factory=dict)
    total_ns: int = 0

    def level(self, k: int) -> LevelStats:
        if k not in self.levels:
            self.levels[k] = LevelStats(k)
        return self.levels[k]

    def check_ordering(self) -> None:
        for st in self.levels.values():
            if st.cech_count > st.candidates:
                raise AssertionError(f"k={st.k}: {st.cech_count} simplices from {st.candidates} candidates")
            if st.vr_count is not None and st.candidates > st.vr_count:
                raise AssertionError(f"k={st.k}: {st.candidates} candidates exceed {st.vr_count} VR simplices")


@dataclass
class CechComplex:
    ambient_dim: int
    levels: List[ComplexLevel]
    stats: BenchStats = field(default_factory=BenchStats)
    eps: float = 0.0

    @property
    def dimension(self) -> int:
        """Highest non-empty level (-1 for an empty complex)."""
        for lvl in reversed(self.levels):
            if len(lvl):
                return lvl.dimension
        return -1

    def counts(self) -> List[int]:
        return [len(lvl) for lvl in self.levels]

    def simplex_sets(self) -> List[set]:
        """Level sets with trailing empty levels removed, for comparisons."""
        out = [set(lvl.members) for lvl in self.levels]
        while out and not out[-1]:
            out.pop()
        return out

    def __contains__(self, s) -> bool:
        k = len(s) - 1
        return 0 <= k < len(self.levels) and s in self.levels[k]

    def is_closed(self) -> bool:
        for lvl in self.levels[1:]:
            below = self.levels[lvl.dimension - 1]
            for s in lvl:
                if any(f not in below for f in faces(s)):
                    return False
        return True
