import itertools
import random

import pytest

import dyncon


def path(n):
    return dyncon.Graph(n, [(i, i + 1) for i in range(1, n)])


K4 = dyncon.Graph(4, list(itertools.combinations(range(1, 5), 2)))


def test_graph_and_parser():
    g = dyncon.parse_edge_list("1 2\n2 3\n")
    assert (g.n, g.m) == (3, 2)
    assert g.edges() == [(1, 2), (2, 3)]
    assert dyncon.parse_edge_list(g.to_edge_list()) == g
    with pytest.raises(dyncon.ParseError):
        dyncon.parse_edge_list("1 1\n")
    with pytest.raises(ValueError):
        dyncon.Graph(2, [(1, 2), (2, 1)])


def test_edge_engine_matches_oracle():
    rng = random.Random(5)
    g = K4
    for backend in ("dfs", "uf"):
        s = dyncon.EdgeDecremental(g, backend=backend)
        removed = []
        for e in rng.sample(g.edges(), g.m):
            s.delete_edge(*e)
            removed.append(e)
            assert s.h_size <= 2 * len(removed) + 1
            for u, v in itertools.combinations(range(1, 5), 2):
                assert s.connected(u, v) == dyncon.oracle_connected(g, removed, [], u, v)
        assert not s.connected_all()
    with pytest.raises(ValueError):
        dyncon.EdgeDecremental(path(3)).delete_edge(1, 3)


def test_tree_engine():
    g = dyncon.Graph(3, [(1, 2), (2, 3), (1, 3)])
    s = dyncon.TreeDecremental(g)
    nontree = [e for e in g.edges() if not s.is_tree_edge(*e)]
    assert len(nontree) == 1
    s.delete_edge(*nontree[0])
    assert s.connected_all()
    a, b = s.tree_edges()[0]
    s.delete_edge(a, b)
    assert not s.connected(a, b)


def test_witnesses():
    assert not dyncon.k_edge_witness(K4, 1, 2, [(1, 2), (1, 3)])
    assert dyncon.k_edge_witness(K4, 1, 2, [(1, 2), (1, 3), (1, 4)])
    assert dyncon.sparse_certificate(K4, 3) == K4
    t = dyncon.TreeIndex(path(4), root=1)
    assert t.lca(3, 4) == 3
    assert t.vertex_witness(1, 4, [2])
    assert not t.edge_witness(1, 2, [(3, 4)])


def test_spanning_tree_degree():
    star_plus = dyncon.Graph(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5)])
    tree = dyncon.min_degree_spanning_tree(star_plus)
    assert tree.m == 4 and dyncon.is_connected(tree)
    assert max(tree.degree(v) for v in range(1, 6)) <= 3


def test_layout_engine():
    g = dyncon.Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    layout = dyncon.LinearLayout(g, [1, 2, 3, 4])
    assert layout.cutwidth == 2 and layout.holes == []
    assert layout.profile == [2, 2, 2]
    for lazy in (False, True):
        s = dyncon.LayoutDecremental(g, layout, lazy_holes=lazy)
        s.delete_vertex(2)
        assert s.connected(1, 3)
        s.delete_vertex(4)
        assert not s.connected(1, 3)
        with pytest.raises(dyncon.DeletedVertexError):
            s.connected(2, 1)
    assert dyncon.exhaustive_layout(path(5)).cutwidth == 1
    assert len(dyncon.greedy_path_cover(path(5))) == 1


def test_labels():
    g = path(3)
    labels = dyncon.mark(g, dyncon.LinearLayout(g, [1, 2, 3]))
    assert dyncon.decode(labels[0], labels[2], [labels[1]])
    assert not dyncon.decode(labels[0], labels[2])
    assert dyncon.labels_from_bytes(dyncon.labels_to_bytes(labels)) == labels
    with pytest.raises(RuntimeError):
        dyncon.labels_from_bytes(b"nope")
    sets = dyncon.mark_with_sets(g, [[(1, 2)], [], []])
    assert dyncon.decode_pair(sets[0], sets[2])
    assert not dyncon.decode_pair(sets[1], sets[2])
