import pytest

from gcech.complex import BenchStats, CechComplex, ComplexLevel, LevelStats, NeighborhoodGraph, common_neighbors, faces


def test_insert_and_contains():
    lvl = ComplexLevel(2)
    lvl.insert((0, 1, 2), (0.5, 0.3))
    assert (0, 1, 2) in lvl
    assert (0, 1, 3) not in lvl
    assert lvl.witness((0, 1, 2)) == (0.5, 0.3)


def test_double_insert_is_noop():
    lvl = ComplexLevel(2)
    lvl.insert((0, 1, 2), (0.5, 0.3))
    lvl.insert((0, 1, 2), (0.5, 0.3))
    assert len(lvl) == 1
    with pytest.raises(ValueError):
        lvl.insert((0, 1, 2), (9.0, 9.0))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        ComplexLevel(2).insert((0, 1), None)


def test_drop_witnesses_keeps_members():
    lvl = ComplexLevel(1)
    lvl.insert((0, 1), (0.0, 0.0))
    lvl.drop_witnesses()
    assert (0, 1) in lvl and lvl.witness((0, 1)) is None


@pytest.fixture
def tri_plus_hub():
    # triangle 0-1-2 plus vertex 3 adjacent to all, vertex 4 isolated
    return NeighborhoodGraph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])


def test_common_neighbors(tri_plus_hub):
    g = tri_plus_hub
    assert common_neighbors(g, (0, 1)) == [2, 3]
    assert common_neighbors(g, (0,)) == g.neighbors(0)
    assert common_neighbors(g, (0, 4)) == []


def test_graph_symmetric_no_loops(tri_plus_hub):
    g = tri_plus_hub
    for u in range(len(g)):
        assert u not in g.nbrs[u]
        for v in g.nbrs[u]:
            assert u in g.nbrs[v]
    with pytest.raises(ValueError):
        g.add_edge(2, 2)


def test_faces():
    assert faces((0, 1, 2)) == [(1, 2), (0, 2), (0, 1)]
    assert faces((0, 1)) == [(1,), (0,)]
    f = faces((5, 7, 9, 11))
    assert len(f) == 4 and all(len(x) == 3 and list(x) == sorted(x) for x in f)
    with pytest.raises(ValueError):
        faces((3,))


def test_closure_check():
    levels = [ComplexLevel(0), ComplexLevel(1), ComplexLevel(2)]
    for v in range(3):
        levels[0].insert((v,))
    for e in [(0, 1), (0, 2), (1, 2)]:
        levels[1].insert(e)
    levels[2].insert((0, 1, 2))
    cx = CechComplex(2, levels)
    assert cx.is_closed() and cx.dimension == 2 and cx.counts() == [3, 3, 1]
    levels[1].members.discard((1, 2))
    assert not cx.is_closed()


def test_stats_ordering():
    st = BenchStats()
    st.levels[2] = LevelStats(2, candidates=5, cech_count=3, vr_count=7)
    st.check_ordering()
    st.levels[3] = LevelStats(3, candidates=5, cech_count=6)
    with pytest.raises(AssertionError):
        st.check_ordering()
