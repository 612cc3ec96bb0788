import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load, triangle
from oracles import intersects
from gcech import Ball, BuildOptions, Disk, Tolerance, build_complex, build_neighborhood_graph
from gcech.baselines import oracle_complex, vr_complex
from gcech.complex import ComplexLevel
from gcech.construct import generate_candidates, k_simplices, verify2d, verify3d
from gcech.geom2d import point_in_all
from gcech.geom3d import point_in_all_balls

TOL = Tolerance()
TOL2 = Tolerance(2 * TOL.eps)


def level_of(k, simplices, witnesses=None):
    lvl = ComplexLevel(k)
    for s in simplices:
        lvl.insert(s, (witnesses or {}).get(s))
    return lvl


@st.composite
def datasets(draw, dim=2, n=(3, 10), extent=5.0, rad=(0.5, 2.0)):
    size = draw(st.integers(*n))
    c = st.floats(0, extent, allow_nan=False)
    r = st.floats(*rad, allow_nan=False)
    cls = Disk if dim == 2 else Ball
    return [cls(i, tuple(draw(c) for _ in range(dim)), draw(r)) for i in range(size)]


class TestGraph:
    @pytest.mark.parametrize("x, edge", [(1.5, True), (2.0, True), (2.5, False)])
    def test_edges(self, x, edge):
        g = build_neighborhood_graph([Disk(0, (0, 0), 1), Disk(1, (x, 0), 1)], TOL)
        assert (1 in g.nbrs[0]) is edge

    @given(datasets(n=(2, 30), extent=20.0))
    def test_grid_matches_all_pairs(self, ds):
        a = build_neighborhood_graph(ds, TOL, "all_pairs")
        b = build_neighborhood_graph(ds, TOL, "grid")
        assert a.edges() == b.edges()


class TestCandidates:
    def test_single_extension(self):
        from gcech.complex import NeighborhoodGraph

        g = NeighborhoodGraph(3, [(0, 1), (0, 2), (1, 2)])
        assert list(generate_candidates(level_of(1, [(0, 1)]), g)) == [((0, 1), 2)]

    def test_max_index_dedup(self):
        from gcech.complex import NeighborhoodGraph

        g = NeighborhoodGraph(3, [(0, 1), (0, 2), (1, 2)])
        prev = level_of(1, [(0, 1), (0, 2), (1, 2)])
        assert list(generate_candidates(prev, g, deterministic=True)) == [((0, 1), 2)]

    def test_empty(self):
        from gcech.complex import NeighborhoodGraph

        assert list(generate_candidates(level_of(1, []), NeighborhoodGraph(3))) == []

    @given(datasets(n=(4, 14)))
    def test_each_clique_once(self, ds):
        g = build_neighborhood_graph(ds, TOL)
        vr = vr_complex(len(ds), g)
        for k in range(2, len(vr)):
            prev = level_of(k - 1, vr[k - 1])
            cands = [s + (d,) for s, d in generate_candidates(prev, g)]
            assert len(cands) == len(set(cands))
            assert set(cands) == vr[k]


class TestVerify2d:
    def test_equilateral_side1(self):
        ds = triangle(1.0)
        w = verify2d((0, 1), ds[2], (0.5, 0.0), ds, TOL)
        assert w is not None and point_in_all(w, ds, TOL2)

    def test_equilateral_side19(self):
        ds = triangle(1.9)
        assert intersects(ds) is False  # independent check of the frozen expectation
        assert verify2d((0, 1), ds[2], (0.95, 0.0), ds, TOL) is None

    def test_containment_branch(self):
        ds = [Disk(0, (0, 0), 1), Disk(1, (0.2, 0), 0.5)]
        assert verify2d((0,), ds[1], (0.0, 0.0), ds, TOL) == (0.2, 0)

    def test_cached_point_branch(self):
        ds = [Disk(0, (0, 0), 1), Disk(1, (1, 0), 1), Disk(2, (0.5, 0.1), 3)]
        cached = (0.5, 0.0)
        assert verify2d((0, 1), ds[2], cached, ds, TOL) is cached

    @settings(max_examples=100)
    @given(datasets(n=(3, 7)))
    def test_against_numeric_oracle(self, ds):
        """Every VR candidate extending a Čech face: a returned witness is a
        certificate; a rejection must not be certifiably wrong."""
        cx = build_complex(ds, BuildOptions(keep_witnesses=True))
        g = build_neighborhood_graph(ds, TOL)
        for k in range(2, len(cx.levels) + 1):
            prev = cx.levels[k - 1]
            for s, d in generate_candidates(prev, g):
                w = verify2d(s, ds[d], prev.witness(s), ds, TOL)
                members = [ds[i] for i in s + (d,)]
                if w is not None:
                    assert point_in_all(w, members, TOL2)
                else:
                    assert intersects(members) is not True


class TestVerify3d:
    @staticmethod
    def tri(side):
        return [Ball(d.id, d.center + (0.0,), 1.0) for d in triangle(side)]

    def test_equilateral_side1(self):
        ds = self.tri(1.0)
        assert intersects(ds) is True
        w = verify3d((0, 1), ds[2], (0.5, 0.0, 0.0), ds, TOL)
        assert w is not None and point_in_all_balls(w, ds, TOL2)

    def test_equilateral_side19(self):
        ds = self.tri(1.9)
        assert intersects(ds) is False
        assert verify3d((0, 1), ds[2], (0.95, 0.0, 0.0), ds, TOL) is None

    def test_cached_point_branch(self):
        ds = [Ball(0, (0, 0, 0), 1), Ball(1, (1, 0, 0), 1), Ball(2, (0.5, 0.1, 0), 3)]
        cached = (0.5, 0.0, 0.0)
        assert verify3d((0, 1), ds[2], cached, ds, TOL) is cached

    def test_crease_branch_needed(self):
        # cached point outside the new ball; the witness must come from a crease
        ds = [Ball(0, (0, 0, 0), 1), Ball(1, (1.5, 0, 0), 1), Ball(2, (0.75, 1.2, 0), 1)]
        assert intersects(ds) is True
        w = verify3d((0, 1), ds[2], (0.75, -0.6, 0.0), ds, TOL)
        assert w is not None and point_in_all_balls(w, ds, TOL2)

    @settings(max_examples=60)
    @given(datasets(dim=3, n=(3, 7)))
    def test_against_numeric_oracle(self, ds):
        cx = build_complex(ds, BuildOptions(keep_witnesses=True))
        g = build_neighborhood_graph(ds, TOL)
        for k in range(2, len(cx.levels) + 1):
            prev = cx.levels[k - 1]
            for s, d in generate_candidates(prev, g):
                w = verify3d(s, ds[d], prev.witness(s), ds, TOL)
                members = [ds[i] for i in s + (d,)]
                if w is not None:
                    assert point_in_all_balls(w, members, TOL2)
                else:
                    assert intersects(members) is not True


class TestKSimplices:
    def levels01(self, ds):
        cx = build_complex(ds, BuildOptions(max_dimension=1, keep_witnesses=True))
        return cx.levels[1], build_neighborhood_graph(ds, TOL)

    def test_side1(self):
        ds = triangle(1.0)
        s1, g = self.levels01(ds)
        assert k_simplices(s1, g, ds, BuildOptions()).sorted() == [(0, 1, 2)]

    def test_side19(self):
        ds = triangle(1.9)
        s1, g = self.levels01(ds)
        assert len(k_simplices(s1, g, ds, BuildOptions())) == 0

    def test_square(self):
        ds = [Disk(i, p, 1.0) for i, p in enumerate([(0, 0), (0.5, 0), (0, 0.5), (0.5, 0.5)])]
        assert intersects(ds) is True
        s1, g = self.levels01(ds)
        s2 = k_simplices(s1, g, ds, BuildOptions())
        assert len(s2) == 4
        assert k_simplices(s2, g, ds, BuildOptions()).sorted() == [(0, 1, 2, 3)]


class TestBuildComplex:
    def test_single_disk(self):
        cx = build_complex([Disk(0, (0, 0), 1)])
        assert cx.counts() == [1]

    def test_triangle(self):
        assert build_complex(triangle(1.0)).counts() == [3, 3, 1]

    def test_level_witnesses(self):
        cx = build_complex(triangle(1.0), BuildOptions(keep_witnesses=True))
        assert cx.levels[0].witness((1,)) == (1.0, 0.0)
        for s, w in cx.levels[1].witnesses.items():
            assert point_in_all(w, [triangle(1.0)[i] for i in s], TOL2)

    @pytest.mark.parametrize(
        "ds",
        [
            [Disk(0, (0, 0), 1), Disk(0, (1, 0), 1)],
            [Disk(0, (0, 0), 1), Disk(2, (1, 0), 1)],
            [],
        ],
    )
    def test_invalid_dataset(self, ds):
        with pytest.raises(ValueError):
            build_complex(ds)

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValueError):
            build_complex([Disk(0, (0, 0), 1), Ball(1, (0, 0, 0), 1)])

    def test_max_dimension(self):
        cx = build_complex(load("even-40.txt"), BuildOptions(max_dimension=2))
        assert len(cx.levels) == 3

    def test_even40_every_simplex_checked(self):
        ds = load("even-40.txt")
        cx = build_complex(ds)
        g = build_neighborhood_graph(ds, TOL)
        assert cx.simplex_sets() == oracle_complex(ds, g, TOL)
        assert cx.dimension >= 3

    def test_memory_policy(self):
        cx = build_complex(load("even-40.txt"))
        top = cx.dimension
        assert cx.levels[top].witnesses is not None
        assert all(lvl.witnesses is None for lvl in cx.levels[: top - 1])
        kept = build_complex(load("even-40.txt"), BuildOptions(keep_witnesses=True))
        assert all(lvl.witnesses is not None for lvl in kept.levels)

    def test_workers_do_not_change_output(self):
        ds = load("even-40.txt")
        one = build_complex(ds, BuildOptions(keep_witnesses=True, deterministic=True))
        four = build_complex(ds, BuildOptions(keep_witnesses=True, deterministic=True, workers=4))
        assert one.simplex_sets() == four.simplex_sets()
        for a, b in zip(one.levels, four.levels):
            assert a.witnesses == b.witnesses

    @settings(max_examples=80)
    @given(datasets(n=(3, 12)))
    def test_oracle_equivalence(self, ds):
        g = build_neighborhood_graph(ds, TOL)
        assert build_complex(ds).simplex_sets() == oracle_complex(ds, g, TOL)

    @settings(max_examples=40)
    @given(datasets(dim=3, n=(3, 9)))
    def test_oracle_equivalence_3d(self, ds):
        g = build_neighborhood_graph(ds, TOL)
        assert build_complex(ds).simplex_sets() == oracle_complex(ds, g, TOL)

    @settings(max_examples=60)
    @given(datasets(n=(3, 12)), st.randoms(use_true_random=False))
    def test_permutation_invariance(self, ds, rnd):
        perm = list(range(len(ds)))
        rnd.shuffle(perm)
        relabeled = [Disk(perm[d.id], d.center, d.radius) for d in ds]
        a = build_complex(ds).simplex_sets()
        b = build_complex(relabeled).simplex_sets()
        assert [{tuple(sorted(perm[v] for v in s)) for s in lvl} for lvl in a] == b

    @settings(max_examples=60)
    @given(datasets(n=(3, 12)))
    def test_subcomplex_of_vr_and_closed(self, ds):
        cx = build_complex(ds)
        vr = vr_complex(len(ds), build_neighborhood_graph(ds, TOL))
        sets = cx.simplex_sets()
        assert cx.is_closed()
        for k, lvl in enumerate(sets):
            assert lvl <= vr[k]
        assert sets[0] == vr[0]
        if len(vr) > 1 and vr[1]:
            assert sets[1] == vr[1]

    @settings(max_examples=60)
    @given(datasets(n=(3, 12)))
    def test_witnesses_sound(self, ds):
        cx = build_complex(ds, BuildOptions(keep_witnesses=True))
        for lvl in cx.levels:
            for s, w in lvl.witnesses.items():
                assert point_in_all(w, [ds[i] for i in s], TOL2)


def test_closed_under_faces_exhaustive():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(5, 25)
        ds = [Disk(i, (rng.uniform(0, 10), rng.uniform(0, 10)), rng.uniform(1, 3)) for i in range(n)]
        assert build_complex(ds).is_closed()


def test_tangent_pair_is_edge():
    cx = build_complex([Disk(0, (0, 0), 1), Disk(1, (2, 0), 1)], BuildOptions(keep_witnesses=True))
    assert cx.levels[1].sorted() == [(0, 1)]
    assert math.dist(cx.levels[1].witness((0, 1)), (1, 0)) < 1e-12
