import pytest

from qlat.families import connected_bridgeless_multigraphs, graph_tree_instances
from qlat.graphs import (OrientedMultigraph, SpanningTree, cycle_space_gf2, dot,
                         enumerate_spanning_trees, fundamental_cut,
                         fundamental_cycle, tree_overlap_counts, validate)


def triangle():
    return OrientedMultigraph(3, [(1, 1, 2), (2, 2, 3), (3, 1, 3)])


def theta():
    return OrientedMultigraph(2, [(1, 1, 2), (2, 1, 2), (3, 1, 2)])


def k4_star():
    g = OrientedMultigraph(4, [(1, 1, 2), (2, 1, 3), (3, 1, 4),
                               (4, 2, 3), (5, 2, 4), (6, 3, 4)])
    return g, SpanningTree({1, 2, 3})


def test_validate_examples():
    assert validate(triangle(), SpanningTree({1, 2})).ok
    rep = validate(OrientedMultigraph(2, [(1, 1, 2)]), SpanningTree({1}))
    assert not rep.ok and rep.codes() == {"bridge"}
    rep = validate(triangle(), SpanningTree({1}))
    assert "tree_size" in rep.codes()
    rep = validate(triangle(), SpanningTree({1, 9}))
    assert "tree_edge_range" in rep.codes()
    loopy = OrientedMultigraph(2, [(1, 1, 2), (2, 1, 2), (3, 1, 1)])
    rep = validate(loopy, SpanningTree({3}))
    assert "tree_loop" in rep.codes()


def test_validate_reports_all_violations():
    g = OrientedMultigraph(4, [(1, 1, 2), (2, 3, 4)])
    rep = validate(g, SpanningTree({1}))
    assert {"disconnected", "bridge", "tree_size"} <= rep.codes()


def test_fundamental_cycle_examples():
    g, t = triangle(), SpanningTree({1, 2})
    assert fundamental_cycle(g, t, 3) == (-1, -1, 1)
    loopy = OrientedMultigraph(2, [(1, 1, 2), (2, 1, 2), (3, 1, 1)])
    assert fundamental_cycle(loopy, SpanningTree({1}), 3) == (0, 0, 1)
    assert fundamental_cycle(theta(), SpanningTree({1}), 2) == (-1, 1, 0)
    with pytest.raises(ValueError):
        fundamental_cycle(g, t, 1)


def test_fundamental_cut_examples():
    g, t = triangle(), SpanningTree({1, 2})
    assert fundamental_cut(g, t, 1) == (1, 0, 1)
    two = OrientedMultigraph(2, [(1, 1, 2)])
    assert fundamental_cut(two, SpanningTree({1}), 1) == (1,)
    # sign duality spot check: edge 1 in C3 vs edge 3 in K1
    assert fundamental_cycle(g, t, 3)[0] == -fundamental_cut(g, t, 1)[2]
    with pytest.raises(ValueError):
        fundamental_cut(g, t, 3)


def test_cut_entry_at_own_edge_is_positive():
    for g, t in graph_tree_instances(4):
        for e in t.tree_edges:
            assert fundamental_cut(g, t, e)[e - 1] == 1
        for f in range(1, g.edge_count + 1):
            if f not in t.tree_edges:
                assert fundamental_cycle(g, t, f)[f - 1] == 1


def test_enumerate_spanning_trees_counts():
    assert len(enumerate_spanning_trees(triangle())) == 3
    g, _ = k4_star()
    trees = enumerate_spanning_trees(g)
    assert len(trees) == 16
    assert len(set(trees)) == 16
    path = OrientedMultigraph(3, [(1, 1, 2), (2, 2, 3)])
    assert enumerate_spanning_trees(path) == [SpanningTree({1, 2})]
    with pytest.raises(ValueError):
        enumerate_spanning_trees(OrientedMultigraph(2, []))


def test_tree_overlap_counts_examples():
    assert tree_overlap_counts(triangle(), SpanningTree({1, 2})) == (1, 2, 0)
    g, t = k4_star()
    counts = tree_overlap_counts(g, t)
    assert counts == (1, 6, 9, 0)
    assert sum(counts) == 16
    single = OrientedMultigraph(1, [])
    assert tree_overlap_counts(single, SpanningTree(set())) == (1,)


def test_tree_overlap_totals_on_family():
    for g, t in graph_tree_instances(5):
        counts = tree_overlap_counts(g, t)
        assert counts[0] == 1
        assert sum(counts) == len(enumerate_spanning_trees(g))
        assert len(counts) == len(t.tree_edges) + 1


def test_cycle_space_dimensions():
    assert len(cycle_space_gf2(triangle())) == 1
    assert cycle_space_gf2(triangle())[0] == 0b111
    assert len(cycle_space_gf2(theta())) == 2
    path = OrientedMultigraph(3, [(1, 1, 2), (2, 2, 3)])
    assert cycle_space_gf2(path) == []
    for g, _ in graph_tree_instances(5):
        assert len(cycle_space_gf2(g)) == g.edge_count - g.vertex_count + 1


def test_sign_duality_and_orthogonality_exhaustive():
    # every graph with <= 5 edges, every tree: C/K sign opposition and
    # cut-cycle orthogonality
    for g, t in graph_tree_instances(5):
        cotree = [e for e in range(1, g.edge_count + 1) if e not in t.tree_edges]
        for i in t.tree_edges:
            cut = fundamental_cut(g, t, i)
            for j in cotree:
                cyc = fundamental_cycle(g, t, j)
                assert cyc[i - 1] == -cut[j - 1]
                assert dot(cut, cyc) == 0


def test_cycle_supported_on_tree_plus_f():
    for g, t in graph_tree_instances(5):
        for f in range(1, g.edge_count + 1):
            if f in t.tree_edges:
                continue
            cyc = fundamental_cycle(g, t, f)
            for eid in range(1, g.edge_count + 1):
                if cyc[eid - 1] and eid != f:
                    assert eid in t.tree_edges
        for e in t.tree_edges:
            cut = fundamental_cut(g, t, e)
            inside = [i for i in t.tree_edges if cut[i - 1]]
            assert inside == [e]


def test_family_is_bridgeless_connected_and_deduplicated():
    fam = connected_bridgeless_multigraphs(4)
    from qlat.graphs import bridges, is_connected
    for g in fam:
        assert is_connected(g) and not bridges(g)
    # digon, triangle, theta present
    shapes = {(g.vertex_count, g.edge_count) for g in fam}
    assert (2, 2) in shapes and (3, 3) in shapes and (2, 3) in shapes


def test_graph_constructor_rejects_bad_ids():
    with pytest.raises(ValueError):
        OrientedMultigraph(2, [(1, 1, 2), (3, 2, 1)])
    with pytest.raises(ValueError):
        OrientedMultigraph(2, [(1, 1, 5)])
